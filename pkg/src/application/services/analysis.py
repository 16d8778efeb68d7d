"""
Harmonicity analysis - iterates tau to find the exact proper degree.
"""

from typing import Callable, Optional

from src.domain.algebra.expression import DEFAULT_TERM_CAP, Expression
from src.domain.exceptions import ExpressionTooLarge, ValidationError
from src.domain.geometry.operators import GeometryId, euclidean_laplacian_2d, tau
from src.domain.interfaces.base import DomainService, ILogger
from src.domain.models.entities import DegreeReport

DEFAULT_MAX_R = 64

Step = Callable[[Expression], Expression]
StepObserver = Callable[[int, Expression], None]


def _degree_by_iteration(step: Step, f: Expression, max_r: int,
                         observer: Optional[StepObserver] = None) -> DegreeReport:
    if max_r < 1:
        raise ValidationError("max_r must be at least 1", field='max_r', value=max_r)
    if f.is_zero():
        return DegreeReport(degree=0, max_r=max_r, proper=False)

    chain = []
    current = f
    for r in range(1, max_r + 1):
        chain.append(current.term_count)
        if observer is not None:
            observer(r - 1, current)
        try:
            image = step(current)
        except ExpressionTooLarge as e:
            raise e.at_iteration(r)
        if image.is_zero():
            return DegreeReport(degree=r, max_r=max_r, proper=True,
                                chain=tuple(chain), witness=current)
        current = image
    return DegreeReport(degree=None, max_r=max_r, proper=False,
                        chain=tuple(chain), witness=current)


def harmonicity_degree(g: GeometryId, f: Expression, max_r: int = DEFAULT_MAX_R,
                       term_cap: int = DEFAULT_TERM_CAP) -> DegreeReport:
    """Smallest r <= max_r with tau^r(f) = 0; degree 0 is reserved for f = 0."""
    return _degree_by_iteration(lambda e: tau(g, e, term_cap), f, max_r)


def is_r_harmonic(g: GeometryId, f: Expression, r: int,
                  term_cap: int = DEFAULT_TERM_CAP) -> bool:
    if r < 1:
        raise ValidationError("r must be at least 1", field='r', value=r)
    current = f
    for iteration in range(1, r + 1):
        if current.is_zero():
            return True
        try:
            current = tau(g, current, term_cap)
        except ExpressionTooLarge as e:
            raise e.at_iteration(iteration)
    return current.is_zero()


def euclidean_degree(f: Expression, max_r: int = DEFAULT_MAX_R) -> DegreeReport:
    """Proper degree of a t-free function under the flat planar Laplacian."""
    return _degree_by_iteration(euclidean_laplacian_2d, f, max_r)


class HarmonicityAnalyzer(DomainService):
    """Degree computations bound to configured caps, with per-iteration logging."""

    def __init__(self, logger: ILogger, max_r: int = DEFAULT_MAX_R,
                 term_cap: int = DEFAULT_TERM_CAP):
        super().__init__(logger)
        self.max_r = max_r
        self.term_cap = term_cap

    def degree(self, geometry: GeometryId, f: Expression,
               max_r: Optional[int] = None) -> DegreeReport:
        cap = max_r or self.max_r

        def observe(iteration: int, iterate: Expression) -> None:
            self.logger.debug("tau iterate", component='analysis', geometry=geometry.value,
                              iteration=iteration, terms=iterate.term_count)

        report = _degree_by_iteration(lambda e: tau(geometry, e, self.term_cap), f, cap, observe)
        self.logger.info("harmonicity degree computed", component='analysis',
                         geometry=geometry.value, degree=report.describe(), proper=report.proper)
        return report

    def is_r_harmonic(self, geometry: GeometryId, f: Expression, r: int) -> bool:
        return is_r_harmonic(geometry, f, r, self.term_cap)

    def euclidean_degree(self, f: Expression) -> DegreeReport:
        report = euclidean_degree(f, self.max_r)
        self.logger.info("planar degree computed", component='analysis', degree=report.describe())
        return report
