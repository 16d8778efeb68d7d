"""
Configuration management infrastructure.
"""