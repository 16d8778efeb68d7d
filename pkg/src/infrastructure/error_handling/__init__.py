"""
Error handling infrastructure.
"""