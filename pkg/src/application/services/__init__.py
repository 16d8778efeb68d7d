"""
Application services.
"""