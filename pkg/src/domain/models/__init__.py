"""
Domain models - Entities, value objects, and data structures.
"""