"""
Logging infrastructure.
"""