"""
Test package for polyharm.
"""
