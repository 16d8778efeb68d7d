"""
polyharm - exact polyharmonic functions on the Thurston model geometries.

Organized into domain, application, infrastructure and presentation layers.
"""

__version__ = "1.0.0"
