"""
Presentation layer - the typer command-line front end.
"""
