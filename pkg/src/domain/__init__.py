"""
Domain layer - exact algebra, geometry operators, entities and exceptions.
"""
