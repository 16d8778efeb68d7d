"""
Floating-point evaluation and a finite-difference oracle for tau.

The stencils below restate each Laplace-Beltrami operator in real
coordinates (x, y, t) and never touch the symbolic tables, so agreement
with the exact tau is an independent check of those tables.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.domain.algebra.expression import DEFAULT_TERM_CAP, Expression
from src.domain.exceptions import InvalidPoint, ValidationError
from src.domain.geometry.operators import GeometryId, tau
from src.domain.interfaces.base import DomainService, ILogger
from src.domain.models.entities import SL2_MIN_ABS_Y, CheckReport, EvalPoint

DEFAULT_SEED = 20240601
DEFAULT_STEP = 1e-4
DEFAULT_TOLERANCE = 1e-6
DEFAULT_RADIUS = 0.5
H2_MAX_RADIUS = 0.8

Axis = str
Coefficient = Callable[[float, float, float], float]


class CompiledExpression:
    """An Expression flattened into numpy arrays for repeated evaluation."""

    def __init__(self, f: Expression):
        items = list(f.items())
        self.size = len(items)
        self.coeffs = np.array([complex(c) for _, c in items], dtype=np.complex128)
        self.a = np.array([k.a for k, _ in items], dtype=np.int64)
        self.b = np.array([k.b for k, _ in items], dtype=np.int64)
        self.d = np.array([k.d for k, _ in items], dtype=np.int64)
        self.p = np.array([complex(k.p) for k, _ in items], dtype=np.complex128)
        self.q = np.array([complex(k.q) for k, _ in items], dtype=np.complex128)
        self.s = np.array([complex(k.s) for k, _ in items], dtype=np.complex128)

    def at(self, u: complex, v: complex, t: float) -> complex:
        if not self.size:
            return 0j
        values = (self.coeffs
                  * np.power(u, self.a) * np.power(v, self.b) * np.power(t, self.d)
                  * np.exp(self.p * u + self.q * v + self.s * t))
        return complex(values.sum())


def _abstract_coordinates(g: GeometryId, x: float, y: float) -> Tuple[complex, complex]:
    if g.is_complex:
        return complex(x, y), complex(x, -y)
    return complex(x), complex(y)


def _evaluator(g: GeometryId, f: Expression) -> Callable[[float, float, float], complex]:
    compiled = CompiledExpression(f)

    def evaluate(x: float, y: float, t: float) -> complex:
        u, v = _abstract_coordinates(g, x, y)
        return compiled.at(u, v, t)

    return evaluate


def eval_expression(f: Expression, p: EvalPoint, g: GeometryId) -> complex:
    """Value of f at p; (u, v) = (x, y) or (x + iy, x - iy) depending on the geometry."""
    p.validate_for(g)
    return _evaluator(g, f)(p.x, p.y, p.t)


def _sol_stencil() -> List[Tuple[Coefficient, Axis]]:
    return [(lambda x, y, t: np.exp(-2 * t), 'xx'),
            (lambda x, y, t: np.exp(2 * t), 'yy'),
            (lambda x, y, t: 1.0, 'tt')]


def _nil_stencil() -> List[Tuple[Coefficient, Axis]]:
    return [(lambda x, y, t: 1.0, 'xx'),
            (lambda x, y, t: 1.0, 'yy'),
            (lambda x, y, t: 2 * x, 'yt'),
            (lambda x, y, t: 1 + x * x, 'tt')]


def _sl2_stencil() -> List[Tuple[Coefficient, Axis]]:
    return [(lambda x, y, t: y * y, 'xx'),
            (lambda x, y, t: y * y, 'yy'),
            (lambda x, y, t: 2.0, 'tt'),
            (lambda x, y, t: -2 * y, 'xt')]


def _h2_stencil() -> List[Tuple[Coefficient, Axis]]:
    # 4(1 - |z|^2)^2 f_{z zbar} with f_{z zbar} = (f_xx + f_yy)/4
    return [(lambda x, y, t: (1 - x * x - y * y) ** 2, 'xx'),
            (lambda x, y, t: (1 - x * x - y * y) ** 2, 'yy'),
            (lambda x, y, t: 1.0, 'tt')]


def _s2_stencil() -> List[Tuple[Coefficient, Axis]]:
    return [(lambda x, y, t: (1 + x * x + y * y) ** 2 / 4, 'xx'),
            (lambda x, y, t: (1 + x * x + y * y) ** 2 / 4, 'yy'),
            (lambda x, y, t: 1.0, 'tt')]


STENCILS: Dict[GeometryId, List[Tuple[Coefficient, Axis]]] = {
    GeometryId.SOL: _sol_stencil(),
    GeometryId.NIL: _nil_stencil(),
    GeometryId.SL2R: _sl2_stencil(),
    GeometryId.H2XR: _h2_stencil(),
    GeometryId.S2XR: _s2_stencil(),
}

_UNIT = {'x': np.array([1.0, 0.0, 0.0]), 'y': np.array([0.0, 1.0, 0.0]), 't': np.array([0.0, 0.0, 1.0])}


def _second_difference(evaluate: Callable[[float, float, float], complex],
                       point: np.ndarray, axes: Axis, h: float) -> complex:
    first, second = _UNIT[axes[0]] * h, _UNIT[axes[1]] * h
    if axes[0] == axes[1]:
        return (evaluate(*(point + first)) - 2 * evaluate(*point) + evaluate(*(point - first))) / (h * h)
    return (evaluate(*(point + first + second)) - evaluate(*(point + first - second))
            - evaluate(*(point - first + second)) + evaluate(*(point - first - second))) / (4 * h * h)


def _fd_value(g: GeometryId, evaluate: Callable[[float, float, float], complex],
              p: EvalPoint, h: float) -> complex:
    point = np.array(p.as_tuple(), dtype=np.float64)
    total = 0j
    for coefficient, axes in STENCILS[g]:
        total += coefficient(p.x, p.y, p.t) * _second_difference(evaluate, point, axes, h)
    return complex(total)


def fd_tau(g: GeometryId, f: Expression, p: EvalPoint, h: float = DEFAULT_STEP) -> complex:
    """Central-difference approximation of tau(f)(p) built from evaluations of f only."""
    if not h > 0:
        raise ValidationError("step must be positive", field='h', value=h)
    p.validate_for(g)
    return _fd_value(g, _evaluator(g, f), p, h)


def sample_points(g: GeometryId, n_points: int, seed: int = DEFAULT_SEED,
                  radius: float = DEFAULT_RADIUS) -> List[EvalPoint]:
    """
    Deterministic pseudo-random admissible points with coordinates in [-radius, radius].

    On H2xR the planar part lies in the disc of radius min(radius, 0.8); on
    SL2R the y coordinate satisfies 0.1 < |y| <= radius.
    """
    if n_points < 1:
        raise ValidationError("n_points must be at least 1", field='n_points', value=n_points)
    rng = np.random.default_rng(seed)
    points: List[EvalPoint] = []
    if g is GeometryId.SL2R and radius <= SL2_MIN_ABS_Y:
        raise InvalidPoint(f"sampling radius must exceed {SL2_MIN_ABS_Y} on sl2", {'radius': radius})
    planar_radius = min(radius, H2_MAX_RADIUS) if g is GeometryId.H2XR else radius
    while len(points) < n_points:
        x, y = rng.uniform(-planar_radius, planar_radius, size=2)
        t = rng.uniform(-radius, radius)
        if g is GeometryId.H2XR and x * x + y * y >= planar_radius * planar_radius:
            continue
        if g is GeometryId.SL2R:
            magnitude = SL2_MIN_ABS_Y + (radius - SL2_MIN_ABS_Y) * (1.0 - rng.random())
            y = magnitude if y >= 0 else -magnitude
        points.append(EvalPoint(float(x), float(y), float(t)))
    return points


def relative_error(symbolic: complex, numeric: complex) -> float:
    return abs(symbolic - numeric) / max(1.0, abs(symbolic))


def cross_check(g: GeometryId, f: Expression, n_points: int = 10, h: float = DEFAULT_STEP,
                tol: float = DEFAULT_TOLERANCE, seed: int = DEFAULT_SEED,
                radius: float = DEFAULT_RADIUS, term_cap: int = DEFAULT_TERM_CAP) -> List[CheckReport]:
    """Compare exact tau(f) with the stencil at ``n_points`` sampled points."""
    if not h > 0:
        raise ValidationError("step must be positive", field='h', value=h)
    exact = _evaluator(g, tau(g, f, term_cap))
    evaluate = _evaluator(g, f)
    reports = []
    for p in sample_points(g, n_points, seed, radius):
        symbolic = exact(p.x, p.y, p.t)
        numeric = _fd_value(g, evaluate, p, h)
        reports.append(CheckReport(point=p, symbolic=symbolic, numeric=numeric,
                                   rel_error=relative_error(symbolic, numeric), tolerance=tol))
    return reports


def richardson_ratio(g: GeometryId, f: Expression, p: EvalPoint, h: float,
                     term_cap: int = DEFAULT_TERM_CAP) -> float:
    """err(h) / err(h/2) of the stencil against exact tau; about 4 for a second-order stencil."""
    p.validate_for(g)
    exact = eval_expression(tau(g, f, term_cap), p, g)
    evaluate = _evaluator(g, f)
    coarse = abs(_fd_value(g, evaluate, p, h) - exact)
    fine = abs(_fd_value(g, evaluate, p, h / 2) - exact)
    return float('inf') if fine == 0 else coarse / fine


class NumericOracle(DomainService):
    """Cross-checks bound to configured step, tolerance, seed and sampling radius."""

    def __init__(self, logger: ILogger, n_points: int = 10, h: float = DEFAULT_STEP,
                 tol: float = DEFAULT_TOLERANCE, seed: int = DEFAULT_SEED,
                 radius: float = DEFAULT_RADIUS, term_cap: int = DEFAULT_TERM_CAP):
        super().__init__(logger)
        self.n_points = n_points
        self.h = h
        self.tol = tol
        self.seed = seed
        self.radius = radius
        self.term_cap = term_cap

    def check(self, geometry: GeometryId, f: Expression,
              n_points: Optional[int] = None) -> List[CheckReport]:
        reports = cross_check(geometry, f, n_points or self.n_points, self.h, self.tol,
                              self.seed, self.radius, self.term_cap)
        worst = max(r.rel_error for r in reports)
        failed = sum(1 for r in reports if not r.passed)
        log = self.logger.warning if failed else self.logger.info
        log("numeric cross-check finished", component='numeric_check', geometry=geometry.value,
            points=len(reports), failed=failed, max_rel_error=worst)
        return reports


def max_error(reports: Sequence[CheckReport]) -> float:
    return max((r.rel_error for r in reports), default=0.0)
