"""
Laplace-Beltrami (tau) and conformality (kappa) operators of the five
non-constant-curvature Thurston geometries, stored as coefficient tables.

Every table entry is ``(prefactor, first, second)`` with multi-indices of
derivative orders in (u, v, t). For tau the entry contributes
``prefactor * D^(first + second) f``; for kappa it contributes
``prefactor * D^first f * D^second h``. A single generic applier handles all
geometries.

Sol, Nil and SL2~ read (u, v) as real (x, y). H2xR and S2xR read (u, v) as
(z, zbar) and differentiate in Wirtinger fashion, z and zbar independent.

Derived tables: kappa on SL2~ is read off the second-order part of its tau,
and both operators on S2xR come from the conformal metric
4/(1 + x^2 + y^2)^2 (dx^2 + dy^2) + dt^2, whose planar Laplacian is
(1 + z zbar)^2/4 * (f_xx + f_yy) = (1 + z zbar)^2 f_{z zbar}.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from src.domain.algebra.expression import (
    DEFAULT_TERM_CAP, Expression, Variable, add, derivative, diff, mul
)
from src.domain.algebra.gaussian import GaussianRational
from src.domain.exceptions import DependsOnT, ExpressionTooLarge, ValidationError

MultiIndex = Tuple[int, int, int]

D_U: MultiIndex = (1, 0, 0)
D_V: MultiIndex = (0, 1, 0)
D_T: MultiIndex = (0, 0, 1)


class GeometryId(Enum):
    """The five geometries handled by the engine."""
    SOL = "sol"
    NIL = "nil"
    SL2R = "sl2"
    H2XR = "h2xr"
    S2XR = "s2xr"

    @property
    def is_complex(self) -> bool:
        """True when (u, v) stand for the conjugate pair (z, zbar)."""
        return self in (GeometryId.H2XR, GeometryId.S2XR)

    @classmethod
    def from_string(cls, value: str) -> 'GeometryId':
        """Create a geometry id from its command-line name."""
        normalized = value.strip().lower()
        aliases = {'sl2r': 'sl2', 'sl2~': 'sl2', 'h2r': 'h2xr', 's2r': 's2xr'}
        normalized = aliases.get(normalized, normalized)
        for geometry in cls:
            if geometry.value == normalized:
                return geometry
        raise ValidationError(f"unknown geometry: {value}", field='geometry', value=value)


@dataclass(frozen=True)
class OperatorEntry:
    """One prefactor with the derivative orders it multiplies."""
    prefactor: Expression
    first: MultiIndex
    second: MultiIndex

    @property
    def combined(self) -> MultiIndex:
        return tuple(i + j for i, j in zip(self.first, self.second))


@dataclass(frozen=True)
class OperatorTable:
    """Exact tau and kappa rules of one geometry."""
    geometry: GeometryId
    tau_rule: Tuple[OperatorEntry, ...]
    kappa_rule: Tuple[OperatorEntry, ...]
    derived_tau: bool = False
    derived_kappa: bool = False


def _tables() -> Dict[GeometryId, OperatorTable]:
    u = Expression.variable(Variable.U)
    v = Expression.variable(Variable.V)
    one = Expression.one()
    half = GaussianRational("1/2")

    def entry(prefactor: Expression, first: MultiIndex, second: MultiIndex) -> OperatorEntry:
        return OperatorEntry(prefactor, first, second)

    def symmetric(prefactor: Expression, first: MultiIndex, second: MultiIndex) -> Tuple[OperatorEntry, ...]:
        return (entry(prefactor, first, second), entry(prefactor, second, first))

    e_minus_2t = Expression.exponential(s=-2)
    e_plus_2t = Expression.exponential(s=2)
    sol_rule = (entry(e_minus_2t, D_U, D_U), entry(e_plus_2t, D_V, D_V), entry(one, D_T, D_T))

    nil_tt = u * u + 1
    nil = OperatorTable(
        GeometryId.NIL,
        tau_rule=(entry(one, D_U, D_U), entry(one, D_V, D_V),
                  entry(u * 2, D_V, D_T), entry(nil_tt, D_T, D_T)),
        kappa_rule=(entry(one, D_U, D_U), entry(one, D_V, D_V),
                    *symmetric(u, D_V, D_T), entry(nil_tt, D_T, D_T)),
    )

    y_squared = v * v
    sl2 = OperatorTable(
        GeometryId.SL2R,
        tau_rule=(entry(y_squared, D_U, D_U), entry(y_squared, D_V, D_V),
                  entry(Expression.constant(2), D_T, D_T), entry(v * -2, D_U, D_T)),
        kappa_rule=(entry(y_squared, D_U, D_U), entry(y_squared, D_V, D_V),
                    entry(Expression.constant(2), D_T, D_T), *symmetric(-v, D_U, D_T)),
        derived_kappa=True,
    )

    hyperbolic = (1 - u * v) ** 2
    h2 = OperatorTable(
        GeometryId.H2XR,
        tau_rule=(entry(hyperbolic * 4, D_U, D_V), entry(one, D_T, D_T)),
        kappa_rule=(*symmetric(hyperbolic * 2, D_U, D_V), entry(one, D_T, D_T)),
    )

    spherical = (1 + u * v) ** 2
    s2 = OperatorTable(
        GeometryId.S2XR,
        tau_rule=(entry(spherical, D_U, D_V), entry(one, D_T, D_T)),
        kappa_rule=(*symmetric(spherical * half, D_U, D_V), entry(one, D_T, D_T)),
        derived_tau=True,
        derived_kappa=True,
    )

    return {
        GeometryId.SOL: OperatorTable(GeometryId.SOL, sol_rule, sol_rule),
        GeometryId.NIL: nil,
        GeometryId.SL2R: sl2,
        GeometryId.H2XR: h2,
        GeometryId.S2XR: s2,
    }


OPERATOR_TABLES: Dict[GeometryId, OperatorTable] = _tables()


def operator_table(g: GeometryId) -> OperatorTable:
    return OPERATOR_TABLES[g]


def tau(g: GeometryId, f: Expression, term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    """Exact Laplace-Beltrami operator of geometry ``g`` applied to ``f``."""
    derivatives: Dict[MultiIndex, Expression] = {}
    result = Expression.zero()
    for item in OPERATOR_TABLES[g].tau_rule:
        order = item.combined
        if order not in derivatives:
            derivatives[order] = derivative(f, order)
        if derivatives[order].is_zero():
            continue
        result = add(result, mul(item.prefactor, derivatives[order], term_cap), term_cap)
    return result


def kappa(g: GeometryId, f: Expression, h: Expression, term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    """Exact conformality operator kappa(f, h) of geometry ``g``."""
    f_derivatives: Dict[MultiIndex, Expression] = {}
    h_derivatives: Dict[MultiIndex, Expression] = {}
    result = Expression.zero()
    for item in OPERATOR_TABLES[g].kappa_rule:
        if item.first not in f_derivatives:
            f_derivatives[item.first] = derivative(f, item.first)
        if item.second not in h_derivatives:
            h_derivatives[item.second] = derivative(h, item.second)
        df, dh = f_derivatives[item.first], h_derivatives[item.second]
        if df.is_zero() or dh.is_zero():
            continue
        product = mul(mul(item.prefactor, df, term_cap), dh, term_cap)
        result = add(result, product, term_cap)
    return result


def iterate_tau(g: GeometryId, f: Expression, times: int, term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    """tau applied ``times`` times; stops early once the iterate vanishes."""
    current = f
    for iteration in range(1, times + 1):
        if current.is_zero():
            break
        try:
            current = tau(g, current, term_cap)
        except ExpressionTooLarge as e:
            raise e.at_iteration(iteration)
    return current


def euclidean_laplacian_2d(f: Expression) -> Expression:
    """Flat planar Laplacian f_uu + f_vv of a t-independent expression."""
    if f.depends_on(Variable.T):
        raise DependsOnT("planar Laplacian needs an expression free of t")
    return add(diff(diff(f, Variable.U), Variable.U), diff(diff(f, Variable.V), Variable.V))
