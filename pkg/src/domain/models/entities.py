"""
Domain entities for the polyharmonic engine.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.domain.algebra.expression import Expression
from src.domain.exceptions import CatalogError, InvalidPoint, ValidationError
from src.domain.geometry.operators import GeometryId

SL2_MIN_ABS_Y = 0.1


class PredictionStatus(Enum):
    """How far a family's predicted degree is trusted."""
    CERTIFIED = "Certified"
    UPPER_BOUND = "UpperBound"
    INCONSISTENT = "PaperInconsistent"


@dataclass(frozen=True)
class DegreeReport:
    """
    Outcome of iterating tau.

    ``degree`` is None when the cap ``max_r`` was hit. ``chain`` lists the
    term counts of f, tau(f), ..., up to the last nonzero iterate, which is
    kept as ``witness``.
    """

    degree: Optional[int]
    max_r: int
    proper: bool
    chain: Tuple[int, ...] = ()
    witness: Optional[Expression] = None

    def __post_init__(self):
        expected = self.max_r if self.degree is None else min(self.degree, self.max_r)
        if len(self.chain) != expected:
            raise ValueError(f"chain length {len(self.chain)} does not match {expected}")

    @property
    def exceeded(self) -> bool:
        return self.degree is None

    def describe(self) -> str:
        return f"Exceeded({self.max_r})" if self.degree is None else str(self.degree)


@dataclass(frozen=True)
class FamilyResult:
    """A constructed function together with its predicted harmonicity degree."""

    family_id: str
    geometry: GeometryId
    expr: Expression
    predicted_degree: int
    prediction_source: str
    prediction_status: PredictionStatus
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class BoundaryCheck:
    """Boundary-row diagnostics of the mixed Sol family."""

    m: int
    n: int
    closed_form_matches: bool
    boundary_image_vanishes: bool
    mismatches: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.closed_form_matches and self.boundary_image_vanishes


@dataclass(frozen=True)
class EvalPoint:
    """Coordinates (x, y, t) of a point of the model space."""

    x: float
    y: float
    t: float

    def validate_for(self, geometry: GeometryId) -> None:
        """Raise InvalidPoint when the point is not admissible for ``geometry``."""
        if geometry is GeometryId.H2XR and self.x * self.x + self.y * self.y >= 1.0:
            raise InvalidPoint("point lies outside the unit disc",
                               {'x': self.x, 'y': self.y, 'geometry': geometry.value})
        if geometry is GeometryId.SL2R and abs(self.y) <= SL2_MIN_ABS_Y:
            raise InvalidPoint(f"|y| must exceed {SL2_MIN_ABS_Y}",
                               {'y': self.y, 'geometry': geometry.value})

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.x, self.y, self.t)


@dataclass(frozen=True)
class CheckReport:
    """Symbolic versus finite-difference value of tau(f) at one point."""

    point: EvalPoint
    symbolic: complex
    numeric: complex
    rel_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.rel_error <= self.tolerance


@dataclass(frozen=True)
class CatalogCase:
    """One machine-checkable example of the catalog."""

    case_id: str
    geometry: GeometryId
    citation: str
    expected_degree: int
    expected_proper: bool
    expression: Optional[str] = None
    family: Optional[str] = None
    params: Dict[str, Any] = field(default_factory=dict)
    crosscheck: bool = True

    def __post_init__(self):
        if not self.case_id:
            raise CatalogError("case id must be non-empty")
        if not self.citation or not self.citation.strip():
            raise CatalogError("citation is mandatory", case_id=self.case_id)
        if (self.expression is None) == (self.family is None):
            raise CatalogError("exactly one of expression or family is required",
                               case_id=self.case_id)
        if self.expected_degree < 0:
            raise CatalogError("expected degree must be a natural number", case_id=self.case_id)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CatalogCase':
        try:
            family = data.get('family')
            return cls(
                case_id=str(data['id']),
                geometry=GeometryId.from_string(data['geometry']),
                citation=str(data.get('citation', '')),
                expected_degree=int(data['expected_degree']),
                expected_proper=bool(data.get('expected_proper', True)),
                expression=data.get('expression'),
                family=family['id'] if family else None,
                params=dict(family.get('params', {})) if family else {},
                crosscheck=bool(data.get('crosscheck', True)),
            )
        except (KeyError, TypeError, ValueError, ValidationError) as e:
            raise CatalogError(f"malformed catalog record: {e}", case_id=str(data.get('id')))


@dataclass(frozen=True)
class CaseOutcome:
    """Result of replaying one catalog case."""

    case: CatalogCase
    computed_degree: Optional[int] = None
    computed_proper: bool = False
    predicted_degree: Optional[int] = None
    prediction_status: Optional[PredictionStatus] = None
    numeric_max_error: Optional[float] = None
    numeric_passed: Optional[bool] = None
    error: Optional[str] = None

    def differences(self) -> List[str]:
        """Human-readable list of expectation mismatches; empty when the case passes."""
        if self.error is not None:
            return [f"error: {self.error}"]
        found = []
        if self.computed_degree != self.case.expected_degree:
            computed = "Exceeded" if self.computed_degree is None else self.computed_degree
            found.append(f"degree: expected {self.case.expected_degree}, computed {computed}")
        if self.computed_proper != self.case.expected_proper:
            found.append(f"proper: expected {self.case.expected_proper}, computed {self.computed_proper}")
        if (self.prediction_status is PredictionStatus.CERTIFIED
                and self.predicted_degree != self.computed_degree):
            found.append(f"certified prediction {self.predicted_degree} not met")
        if (self.prediction_status is PredictionStatus.UPPER_BOUND
                and self.computed_degree is not None
                and self.predicted_degree is not None
                and self.computed_degree > self.predicted_degree):
            found.append(f"upper bound {self.predicted_degree} exceeded")
        if self.numeric_passed is False:
            found.append(f"numeric cross-check failed (max rel error {self.numeric_max_error:.3e})")
        return found

    @property
    def passed(self) -> bool:
        return not self.differences()


@dataclass(frozen=True)
class FamilyRequest:
    """Typed parameters of one family construction; fields unused by a family stay at their defaults."""

    family_id: str
    m: Optional[int] = None
    n: Optional[int] = None
    r: Optional[int] = None
    d: Optional[int] = None
    alpha: Optional[int] = None
    axis: Optional[str] = None
    linear_factor: bool = False
    strict: bool = True
    geometry: Optional[GeometryId] = None
    a: Tuple[Any, ...] = ()
    b: Tuple[Any, ...] = ()
    p: Tuple[Any, ...] = ()
    f: Tuple[Any, ...] = ()
    g: Tuple[Any, ...] = ()
    h1: Optional[Expression] = None
    poly: Optional[Expression] = None
    f_expr: Optional[Expression] = None
    g_expr: Optional[Expression] = None
