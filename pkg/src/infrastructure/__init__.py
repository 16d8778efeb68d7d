"""
Infrastructure layer - text I/O, catalog storage, configuration, logging and error handling.
"""
