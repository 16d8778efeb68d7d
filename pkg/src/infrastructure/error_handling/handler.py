"""
Error handler - structured logging, user messages and process exit codes.
"""

import traceback
from typing import Dict, Any, List, Tuple

from src.domain.interfaces.base import ILogger
from src.domain.exceptions import (
    PolyharmonicError, CatalogError, ConfigurationError, ConstructorError,
    DerivativeVanishes, ExpressionTooLarge, InvalidPoint, ParseError, ValidationError
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_TOO_LARGE = 3
EXIT_DEGREE_CAP = 4
EXIT_CONSTRUCTOR = 5
EXIT_NUMERIC = 6


class ErrorHandler:
    """Maps engine errors to log records, one-line user messages and exit codes."""

    def __init__(self, logger: ILogger):
        self.logger = logger
        self._exit_codes: List[Tuple[type, int]] = []
        self._setup_default_exit_codes()

    def _setup_default_exit_codes(self) -> None:
        # first match wins
        self._exit_codes.extend([
            (ParseError, EXIT_INPUT),
            (ValidationError, EXIT_INPUT),
            (ConfigurationError, EXIT_INPUT),
            (CatalogError, EXIT_INPUT),
            (InvalidPoint, EXIT_INPUT),
            (ExpressionTooLarge, EXIT_TOO_LARGE),
            (ConstructorError, EXIT_CONSTRUCTOR),
        ])

    def handle_error(self, error: Exception, context: Dict[str, Any]) -> str:
        """Log ``error`` and return the message to show the user."""
        self.log_error(error, context)
        return self.create_user_message(error)

    def log_error(self, error: Exception, context: Dict[str, Any]) -> None:
        error_context = {
            'component': 'error_handler',
            'error_type': type(error).__name__,
            'error_message': str(error),
            **context
        }

        if isinstance(error, PolyharmonicError):
            error_context.update(error.context)

            if isinstance(error, ParseError):
                error_context.update({
                    'kind': error.kind.value,
                    'span': [error.span.start, error.span.end]
                })
            elif isinstance(error, ExpressionTooLarge):
                error_context.update({
                    'term_count': error.term_count,
                    'cap': error.cap,
                    'iteration': error.iteration
                })
            elif isinstance(error, ValidationError):
                error_context.update({
                    'field': error.field,
                    'value': str(error.value) if error.value is not None else None
                })
            elif isinstance(error, CatalogError):
                error_context['case_id'] = error.case_id
        else:
            error_context['traceback'] = traceback.format_exc()

        if isinstance(error, (ParseError, ValidationError, ConfigurationError, InvalidPoint)):
            self.logger.warning("Input error", **error_context)
        elif isinstance(error, (ConstructorError, ExpressionTooLarge, CatalogError)):
            self.logger.error("Computation error", **error_context)
        elif isinstance(error, PolyharmonicError):
            self.logger.error("Engine error", **error_context)
        else:
            self.logger.critical("Unexpected error", **error_context)

    def create_user_message(self, error: Exception) -> str:
        if isinstance(error, ParseError):
            return f"parse error: {error}"

        elif isinstance(error, ExpressionTooLarge):
            return f"expression too large: {error.message}\nraise --term-cap or simplify the input."

        elif isinstance(error, DerivativeVanishes):
            return f"constructor error: {error.message}\npass strict=false to accept an upper bound."

        elif isinstance(error, ConstructorError):
            return f"constructor error ({type(error).__name__}): {error.message}"

        elif isinstance(error, ConfigurationError):
            return f"configuration error: {error}"

        elif isinstance(error, ValidationError):
            field = f" [{error.field}]" if error.field else ""
            return f"invalid input{field}: {error.message}"

        elif isinstance(error, CatalogError):
            where = f" in case {error.case_id}" if error.case_id else ""
            return f"catalog error{where}: {error.message}"

        elif isinstance(error, PolyharmonicError):
            return f"error ({type(error).__name__}): {error}"

        else:
            return f"unexpected error: {error}"

    def exit_code_for(self, error: Exception) -> int:
        for error_type, code in self._exit_codes:
            if isinstance(error, error_type):
                return code
        return EXIT_FAILURE

    def add_exit_code(self, error_type: type, code: int) -> None:
        """Register an exit code ahead of the defaults."""
        self._exit_codes.insert(0, (error_type, code))
