"""
Geometry operators - Laplace-Beltrami and conformality tables of the five geometries.
"""
