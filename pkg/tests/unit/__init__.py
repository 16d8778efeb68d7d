"""
Unit tests package.
"""