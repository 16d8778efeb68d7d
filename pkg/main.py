"""
polyharm - command-line entry point.
"""

from src.presentation.command_handlers import app


if __name__ == "__main__":
    app()
