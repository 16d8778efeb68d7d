"""
Domain exceptions and error hierarchy.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Dict, Any


class PolyharmonicError(Exception):
    """Base exception for the polyharmonic engine."""

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} (Context: {context_str})"
        return self.message


class ConfigurationError(PolyharmonicError):
    """Configuration related errors."""
    pass


class ValidationError(PolyharmonicError):
    """Invalid user-supplied parameters."""

    def __init__(self, message: str, field: Optional[str] = None,
                 value: Optional[Any] = None, context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)
        self.field = field
        self.value = value


class ExpressionTooLarge(PolyharmonicError):
    """An expression grew past the configured term cap."""

    def __init__(self, term_count: int, cap: int, iteration: Optional[int] = None,
                 context: Optional[Dict[str, Any]] = None):
        message = f"expression has {term_count} terms, cap is {cap}"
        if iteration is not None:
            message += f" (reached at iteration {iteration})"
        super().__init__(message, context)
        self.term_count = term_count
        self.cap = cap
        self.iteration = iteration

    def at_iteration(self, iteration: int) -> 'ExpressionTooLarge':
        """Copy of this error annotated with the iteration index reached."""
        return ExpressionTooLarge(self.term_count, self.cap, iteration, self.context)


class DependsOnT(PolyharmonicError):
    """A planar operator received an expression involving t."""
    pass


class EscapesBasis(PolyharmonicError):
    """The image of a basis element has a component outside the span."""

    def __init__(self, message: str, term: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)
        self.term = term


class DimensionMismatch(PolyharmonicError):
    """Matrix shapes do not fit the requested operation."""
    pass


class InvalidPoint(PolyharmonicError):
    """An evaluation point lies outside the admissible region of a geometry."""
    pass


class CatalogError(PolyharmonicError):
    """The example catalog file is malformed."""

    def __init__(self, message: str, case_id: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)
        self.case_id = case_id


class ParseErrorKind(Enum):
    """Classes of expression syntax errors."""
    UNEXPECTED_TOKEN = "UnexpectedToken"
    NON_LINEAR_EXPONENT = "NonLinearExponent"
    UNKNOWN_VARIABLE = "UnknownVariable"
    NEGATIVE_POWER = "NegativePower"
    OVERFLOW = "Overflow"


@dataclass(frozen=True)
class SourceSpan:
    """Byte offsets [start, end) into the parsed text."""
    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError("span must satisfy 0 <= start <= end")


class ParseError(PolyharmonicError):
    """Expression text could not be parsed."""

    def __init__(self, kind: ParseErrorKind, span: SourceSpan, message: str,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, context)
        self.kind = kind
        self.span = span

    def __str__(self) -> str:
        return f"{self.kind.value} at {self.span.start}..{self.span.end}: {self.message}"


class ConstructorError(PolyharmonicError):
    """A family constructor rejected its parameters."""
    pass


class ZeroFamily(ConstructorError):
    """All family parameters vanish."""
    pass


class NoProperSolution(ConstructorError):
    """No kernel vector has a nonzero leading coefficient."""
    pass


class NotHarmonic(ConstructorError):
    """A seed function fails the planar Laplace check."""
    pass


class DerivativeVanishes(ConstructorError):
    """Some partial derivative of the seed function vanishes identically."""

    def __init__(self, order: int, axis: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(f"derivative of order {order} along {axis} vanishes", context)
        self.order = order
        self.axis = axis


class DegreeConditionViolated(ConstructorError):
    """The two top coefficients of the t-polynomial are both zero."""
    pass


class InvalidFamilyParameters(ConstructorError):
    """Family parameters have the wrong shape or range."""
    pass
