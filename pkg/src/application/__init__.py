"""
Application layer - degree analysis, family constructors, numeric oracle and catalog replay.
"""
