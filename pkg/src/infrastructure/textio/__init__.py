"""
Text input and output - expression parser and renderers.
"""
