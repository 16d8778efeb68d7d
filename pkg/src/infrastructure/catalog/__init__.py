"""
Example catalog storage.
"""
