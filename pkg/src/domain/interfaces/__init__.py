"""
Domain interfaces - Abstract base classes and protocols for dependency injection.
"""