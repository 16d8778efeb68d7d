"""
Constructors of explicit r-harmonic families on the five geometries.

Each constructor returns a FamilyResult: the function, its predicted degree
and how far that prediction is trusted. ``build_family`` dispatches a typed
FamilyRequest to the right constructor.
"""

from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.application.services.linalg import (
    expression_to_vector, matrix_of_tau, vector_to_expression
)
from src.domain.algebra.expression import (
    DEFAULT_TERM_CAP, Expression, Term, TermKey, Variable, diff
)
from src.domain.algebra.gaussian import GaussianRational, Scalar, ZERO, ONE
from src.domain.algebra.matrix import mat_pow, nullspace, solve_in_span
from src.domain.exceptions import (
    DegreeConditionViolated, DependsOnT, DerivativeVanishes, InvalidFamilyParameters,
    NoProperSolution, NotHarmonic, ZeroFamily
)
from src.domain.geometry.operators import GeometryId, euclidean_laplacian_2d, iterate_tau, tau
from src.domain.models.entities import BoundaryCheck, FamilyRequest, FamilyResult, PredictionStatus

Coefficients = Sequence[Scalar]


class SolAxis(Enum):
    """Which coordinate carries the polynomial part of the harmonic Sol family."""
    Y_MAJOR = "y-major"
    X_MAJOR = "x-major"


class Sl2Axis(Enum):
    """Linear factor multiplying the t-polynomial on SL2~."""
    X = "x"
    Y = "y"
    T = "t"


def _coerce_all(values: Coefficients, name: str, length: Optional[int] = None) -> Tuple[GaussianRational, ...]:
    if length is not None and len(values) != length:
        raise InvalidFamilyParameters(f"{name} needs exactly {length} coefficients, got {len(values)}",
                                      {'parameter': name})
    try:
        return tuple(GaussianRational.coerce(v) for v in values)
    except TypeError as e:
        raise InvalidFamilyParameters(f"{name}: {e}", {'parameter': name})


def _natural(value: Optional[int], name: str) -> int:
    if value is None:
        raise InvalidFamilyParameters(f"parameter {name} is required", {'parameter': name})
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidFamilyParameters(f"{name} must be a natural number", {name: value})
    return value


def _linear_combination(coefficients: Sequence[GaussianRational],
                        monomials: Sequence[Tuple[int, int, int]]) -> Expression:
    return Expression(Term(c, a, b, d) for c, (a, b, d) in zip(coefficients, monomials) if c)


# Sol

def sol_boundary_coefficient(n: int, k: int) -> GaussianRational:
    """(-1)^k / (4^k (k!)^2) * n!/(n-2k)!"""
    if not 0 <= 2 * k <= n:
        return ZERO
    value = Fraction((-1) ** k * factorial(n), 4 ** k * factorial(k) ** 2 * factorial(n - 2 * k))
    return GaussianRational(value)


def sol_harmonic(n: int, axis: SolAxis = SolAxis.Y_MAJOR, linear_factor: bool = False) -> FamilyResult:
    n = _natural(n, 'n')
    terms = []
    for k in range(n // 2 + 1):
        c = sol_boundary_coefficient(n, k)
        if axis is SolAxis.Y_MAJOR:
            terms.append(Term(c, a=1 if linear_factor else 0, b=n - 2 * k, s=GaussianRational(2 * k)))
        else:
            terms.append(Term(c, a=n - 2 * k, b=1 if linear_factor else 0, s=GaussianRational(-2 * k)))
    return FamilyResult(
        family_id='sol-harmonic',
        geometry=GeometryId.SOL,
        expr=Expression(terms),
        predicted_degree=1,
        prediction_source="Sol boundary family: closed-form coefficients (-1)^k/(4^k (k!)^2) n!/(n-2k)!",
        prediction_status=PredictionStatus.CERTIFIED,
    )


def sol_ansatz_basis(m: int, n: int) -> List[Term]:
    """x^(m-2i) y^(n-2j) e^(2t(j-i)), ordered by i then j; index 0 is x^m y^n."""
    return [Term(ONE, a=m - 2 * i, b=n - 2 * j, s=GaussianRational(2 * (j - i)))
            for i in range(m // 2 + 1) for j in range(n // 2 + 1)]


def sol_polyharmonic(m: int, n: int, term_cap: int = DEFAULT_TERM_CAP) -> FamilyResult:
    """
    Mixed Sol family with leading monomial x^m y^n.

    Solves tau^r f = 0 on the ansatz span through the kernel of M^r, where M
    is tau restricted to the span and r = min(m//2, n//2) + 1. Among the
    reduced-echelon kernel vectors, the first with a nonzero x^m y^n
    coordinate and M^(r-1) v != 0 is scaled so that coordinate is 1.
    """
    m, n = _natural(m, 'm'), _natural(n, 'n')
    basis = sol_ansatz_basis(m, n)
    r = min(m // 2, n // 2) + 1
    tau_matrix = matrix_of_tau(GeometryId.SOL, basis, term_cap)
    below = mat_pow(tau_matrix, r - 1)
    kernel = nullspace(below @ tau_matrix)

    chosen = None
    for vector in kernel:
        if vector[0] and any(below.apply(vector)):
            chosen = vector
            break
    if chosen is None:
        raise NoProperSolution("no kernel vector has a nonzero leading coefficient",
                               {'m': m, 'n': n, 'r': r})

    lead = chosen[0]
    normalized = tuple(c / lead for c in chosen)
    stated = min(m // 2, n // 2) + 2
    return FamilyResult(
        family_id='sol-poly',
        geometry=GeometryId.SOL,
        expr=vector_to_expression(normalized, basis),
        predicted_degree=r,
        prediction_source="Sol mixed family x^m y^n + lower order terms on the exponential ansatz span",
        prediction_status=PredictionStatus.INCONSISTENT,
        notes=(f"stated degree min(m//2, n//2)+2 = {stated}; worked examples and base case give {r}",),
    )


def sol_tau_recursion(m: int, n: int,
                      coeffs: Dict[Tuple[int, int], GaussianRational]) -> Dict[Tuple[int, int], GaussianRational]:
    """
    Coefficients of tau(f) on the ansatz span, by the closed recursion

        c'(i,k) = 4(k-i)^2 c(i,k) + (n+2-2k)(n+1-2k) c(i,k-1) + (m+2-2i)(m+1-2i) c(i-1,k)
    """
    result = {}
    for i in range(m // 2 + 1):
        for k in range(n // 2 + 1):
            value = coeffs.get((i, k), ZERO) * (4 * (k - i) ** 2)
            value = value + coeffs.get((i, k - 1), ZERO) * ((n + 2 - 2 * k) * (n + 1 - 2 * k))
            value = value + coeffs.get((i - 1, k), ZERO) * ((m + 2 - 2 * i) * (m + 1 - 2 * i))
            result[(i, k)] = value
    return result


def sol_coefficient_grid(m: int, n: int, f: Expression) -> Dict[Tuple[int, int], GaussianRational]:
    """Ansatz coordinates (i, j) -> coefficient of x^(m-2i) y^(n-2j) e^(2t(j-i))."""
    basis = sol_ansatz_basis(m, n)
    vector = expression_to_vector(f, basis)
    width = n // 2 + 1
    return {(position // width, position % width): c for position, c in enumerate(vector)}


def sol_boundary_check(m: int, n: int, term_cap: int = DEFAULT_TERM_CAP) -> BoundaryCheck:
    """Compare the boundary row and column of sol_polyharmonic(m, n) with the closed forms."""
    family = sol_polyharmonic(m, n, term_cap)
    grid = sol_coefficient_grid(m, n, family.expr)
    mismatches: List[str] = []
    for i in range(m // 2 + 1):
        expected = sol_boundary_coefficient(m, i)
        if grid[(i, 0)] != expected:
            mismatches.append(f"c({i},0) = {grid[(i, 0)]}, closed form {expected}")
    for k in range(n // 2 + 1):
        expected = sol_boundary_coefficient(n, k)
        if grid[(0, k)] != expected:
            mismatches.append(f"c(0,{k}) = {grid[(0, k)]}, closed form {expected}")

    closed_form_matches = not mismatches
    image = sol_coefficient_grid(m, n, tau(GeometryId.SOL, family.expr, term_cap))
    boundary = [(i, 0) for i in range(m // 2 + 1)] + [(0, k) for k in range(1, n // 2 + 1)]
    vanishes = all(not image[index] for index in boundary)
    if not vanishes:
        mismatches.append("tau of the family is nonzero on the boundary row or column")
    return BoundaryCheck(m=m, n=n, closed_form_matches=closed_form_matches,
                         boundary_image_vanishes=vanishes, mismatches=tuple(mismatches))


_SOL_FR_MONOMIALS = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))


def sol_example_Fr(r: int, a: Coefficients, b: Coefficients) -> FamilyResult:
    """t^(2r) f1(x, y) + t^(2r+1) f2(x, y) with f1, f2 in span{1, x, y, xy}."""
    r = _natural(r, 'r')
    a, b = _coerce_all(a, 'a', 4), _coerce_all(b, 'b', 4)
    if not any(a) and not any(b):
        raise ZeroFamily("both coefficient vectors vanish")
    f1 = _linear_combination(a, _SOL_FR_MONOMIALS)
    f2 = _linear_combination(b, _SOL_FR_MONOMIALS)
    expr = f1 * Expression.monomial(d=2 * r) + f2 * Expression.monomial(d=2 * r + 1)
    return FamilyResult(
        family_id='sol-Fr',
        geometry=GeometryId.SOL,
        expr=expr,
        predicted_degree=r + 1,
        prediction_source="Sol t-polynomial family t^(2r) f1 + t^(2r+1) f2: proper (r+1)-harmonic",
        prediction_status=PredictionStatus.CERTIFIED,
        notes=("an earlier published degree r for this family is a misprint",),
    )


def sol_example_product(a2: Scalar, a3: Scalar, b2: Scalar, b3: Scalar) -> FamilyResult:
    """(a2(2x^2 - e^-2t) + a3(2x^3 - 3x e^-2t)) * (b2(2y^2 - e^2t) + b3(2y^3 - 3y e^2t))"""
    a2, a3, b2, b3 = _coerce_all((a2, a3, b2, b3), 'a2,a3,b2,b3')
    if not a2 and not a3:
        raise ZeroFamily("(a2, a3) vanishes")
    if not b2 and not b3:
        raise ZeroFamily("(b2, b3) vanishes")
    minus, plus = GaussianRational(-2), GaussianRational(2)
    h2 = Expression([Term(2 * a2, a=2), Term(-a2, s=minus),
                     Term(2 * a3, a=3), Term(-3 * a3, a=1, s=minus)])
    h3 = Expression([Term(2 * b2, b=2), Term(-b2, s=plus),
                     Term(2 * b3, b=3), Term(-3 * b3, b=1, s=plus)])
    return FamilyResult(
        family_id='sol-product',
        geometry=GeometryId.SOL,
        expr=h2 * h3,
        predicted_degree=2,
        prediction_source="Sol product of an x-harmonic and a y-harmonic factor: proper biharmonic",
        prediction_status=PredictionStatus.CERTIFIED,
    )


# Nil

def _first_vanishing_derivative(f: Expression, var: Variable, bound: int) -> Optional[int]:
    current = f
    for order in range(1, bound + 1):
        current = diff(current, var)
        if current.is_zero():
            return order
    return None


def nil_product_family(h1: Expression, d: int, alpha: int, strict: bool = True) -> FamilyResult:
    """
    H1(x, y) * x^d * t^alpha for a planar harmonic H1.

    The degree 2*alpha + d + 1 needs every x- and y-derivative of H1 up to
    order 2(2*alpha + d + 1) to be nonzero. With ``strict`` a vanishing
    derivative raises; otherwise the prediction is only an upper bound.
    """
    d, alpha = _natural(d, 'd'), _natural(alpha, 'alpha')
    if h1 is None or h1.is_zero():
        raise ZeroFamily("H1 vanishes")
    try:
        laplacian = euclidean_laplacian_2d(h1)
    except DependsOnT:
        raise NotHarmonic("H1 must not depend on t")
    if not laplacian.is_zero():
        raise NotHarmonic("H1 is not harmonic on the Euclidean plane")

    predicted = 2 * alpha + d + 1
    bound = 2 * predicted
    status = PredictionStatus.CERTIFIED
    notes: Tuple[str, ...] = ()
    for var, axis in ((Variable.U, 'x'), (Variable.V, 'y')):
        order = _first_vanishing_derivative(h1, var, bound)
        if order is None:
            continue
        if strict:
            raise DerivativeVanishes(order, axis)
        status = PredictionStatus.UPPER_BOUND
        notes += (f"derivative of order {order} along {axis} vanishes",)

    return FamilyResult(
        family_id='nil-product',
        geometry=GeometryId.NIL,
        expr=h1 * Expression.monomial(a=d, d=alpha),
        predicted_degree=predicted,
        prediction_source="Nil product H(x,y) x^d t^alpha with planar harmonic H: (2 alpha + d + 1)-harmonic",
        prediction_status=status,
        notes=notes,
    )


def nil_monomial_prediction(m: int, n: int, alpha: int) -> int:
    """Parity-split degree of x^m y^n t^alpha on Nil."""
    if alpha % 2 == 0:
        return (m + alpha) // 2 + n // 2 + 1 + alpha // 2
    return (m + alpha) // 2 + (n + 1) // 2 + 1 + alpha // 2


def nil_monomial_family(m: int, n: int, alpha: int) -> FamilyResult:
    m, n, alpha = _natural(m, 'm'), _natural(n, 'n'), _natural(alpha, 'alpha')
    if (m, n, alpha) == (0, 0, 0):
        raise InvalidFamilyParameters("(m, n, alpha) must not all vanish")
    return FamilyResult(
        family_id='nil-monomial',
        geometry=GeometryId.NIL,
        expr=Expression.monomial(a=m, b=n, d=alpha),
        predicted_degree=nil_monomial_prediction(m, n, alpha),
        prediction_source="Nil monomials x^m y^n t^alpha: parity-split degree formula",
        prediction_status=PredictionStatus.UPPER_BOUND,
    )


NIL_B_MONOMIALS: Tuple[Tuple[int, int, int], ...] = (
    (2, 0, 0), (0, 2, 0), (0, 1, 1), (3, 0, 0), (2, 1, 0), (2, 0, 1),
    (1, 2, 0), (0, 3, 0), (3, 1, 0), (1, 3, 0), (0, 2, 1), (3, 0, 1),
)


def nil_biharmonic_B(b: Coefficients) -> FamilyResult:
    b = _coerce_all(b, 'b', len(NIL_B_MONOMIALS))
    if not any(b):
        raise ZeroFamily("all twelve coefficients vanish")
    return FamilyResult(
        family_id='nil-B',
        geometry=GeometryId.NIL,
        expr=_linear_combination(b, NIL_B_MONOMIALS),
        predicted_degree=2,
        prediction_source="Nil twelve-parameter polynomial family: biharmonic",
        prediction_status=PredictionStatus.UPPER_BOUND,
    )


def nil_iterated_span_check(h1: Expression, d: int, n: int,
                            term_cap: int = DEFAULT_TERM_CAP) -> Optional[Tuple[GaussianRational, ...]]:
    """
    Coefficients c_j with tau^n(H1 x^d) = sum_j c_j * d^j H1/dx^j * x^(d-2n+j)
    on Nil, j = 0..n, or None if the iterate leaves that span. Terms with a
    negative power of x are omitted and get coefficient 0.
    """
    target = iterate_tau(GeometryId.NIL, h1 * Expression.monomial(a=d), n, term_cap)
    candidates: List[Expression] = []
    derivative = h1
    for j in range(n + 1):
        power = d - 2 * n + j
        candidates.append(derivative * Expression.monomial(a=power) if power >= 0 else Expression.zero())
        derivative = diff(derivative, Variable.U)

    keys: List[TermKey] = []
    seen = set()
    for e in candidates + [target]:
        for key in e.keys():
            if key not in seen:
                seen.add(key)
                keys.append(key)
    columns = [[e.coefficient(key) for key in keys] for e in candidates]
    if not keys:
        return tuple(ZERO for _ in candidates)
    return solve_in_span(columns, [target.coefficient(key) for key in keys])


# SL2~

def _trimmed_polynomial(coeffs: Coefficients) -> Tuple[GaussianRational, ...]:
    values = list(_coerce_all(coeffs, 'p'))
    while values and not values[-1]:
        values.pop()
    if not values:
        raise ZeroFamily("polynomial vanishes")
    return tuple(values)


def sl2_axis_family(p_coeffs: Coefficients, axis: Sl2Axis) -> FamilyResult:
    """p_d(t) * y, p_d(t) * x or p_d(t) alone; coefficients in ascending powers of t."""
    coeffs = _trimmed_polynomial(p_coeffs)
    d = len(coeffs) - 1
    p = Expression(Term(c, d=k) for k, c in enumerate(coeffs) if c)
    if axis is Sl2Axis.Y:
        expr, predicted = p * Expression.variable(Variable.V), d // 2 + 1
        source = "SL2~ family p_d(t) y: floor(d/2)+1"
    elif axis is Sl2Axis.X:
        expr, predicted = p * Expression.variable(Variable.U), (d + 1) // 2 + 1
        source = "SL2~ family p_d(t) x: ceil(d/2)+1"
    else:
        expr, predicted = p, d // 2 + 1
        source = "SL2~ t-polynomials p_d(t): floor(d/2)+1"
    return FamilyResult(
        family_id='sl2-axis',
        geometry=GeometryId.SL2R,
        expr=expr,
        predicted_degree=predicted,
        prediction_source=source,
        prediction_status=PredictionStatus.CERTIFIED,
    )


SL2_F2_MONOMIALS: Tuple[Tuple[int, int, int], ...] = (
    (1, 0, 1), (0, 0, 2), (1, 0, 2), (0, 1, 2), (0, 0, 3), (0, 1, 3),
)


def sl2_example_f2(b: Coefficients) -> FamilyResult:
    b = _coerce_all(b, 'b', len(SL2_F2_MONOMIALS))
    if not any(b):
        raise ZeroFamily("all six coefficients vanish")
    return FamilyResult(
        family_id='sl2-f2',
        geometry=GeometryId.SL2R,
        expr=_linear_combination(b, SL2_F2_MONOMIALS),
        predicted_degree=2,
        prediction_source="SL2~ six-parameter polynomial family: biharmonic",
        prediction_status=PredictionStatus.UPPER_BOUND,
        notes=("not proper for every b: b = (2, 0, 0, 1, 0, 0) is harmonic",),
    )


# Product spaces

def product_space_family(geometry: GeometryId, f_coeffs: Coefficients, g_coeffs: Coefficients,
                         p_coeffs: Coefficients, r: int,
                         f_expr: Optional[Expression] = None,
                         g_expr: Optional[Expression] = None) -> FamilyResult:
    """
    (f(z) + g(zbar)) * P(t) on H2xR or S2xR with deg P in {2r-2, 2r-1}.

    f and g are polynomial coefficient lists in z and zbar, optionally plus
    expressions in z alone (resp. zbar alone) such as exp(z).
    """
    if geometry not in (GeometryId.H2XR, GeometryId.S2XR):
        raise InvalidFamilyParameters("product-space family lives on h2xr or s2xr",
                                      {'geometry': geometry.value})
    r = _natural(r, 'r')
    if r < 1:
        raise InvalidFamilyParameters("r must be at least 1", {'r': r})
    p = list(_coerce_all(p_coeffs, 'P'))
    if len(p) > 2 * r:
        raise InvalidFamilyParameters(f"P has degree above 2r-1 = {2 * r - 1}", {'r': r})
    p += [ZERO] * (2 * r - len(p))
    if not p[2 * r - 2] and not p[2 * r - 1]:
        raise DegreeConditionViolated("the coefficients of t^(2r-2) and t^(2r-1) both vanish",
                                      {'r': r})

    holomorphic = Expression(Term(c, a=k) for k, c in enumerate(_coerce_all(f_coeffs, 'f')) if c)
    antiholomorphic = Expression(Term(c, b=k) for k, c in enumerate(_coerce_all(g_coeffs, 'g')) if c)
    if f_expr is not None:
        if f_expr.depends_on(Variable.V) or f_expr.depends_on(Variable.T):
            raise InvalidFamilyParameters("the holomorphic part may depend on z only")
        holomorphic = holomorphic + f_expr
    if g_expr is not None:
        if g_expr.depends_on(Variable.U) or g_expr.depends_on(Variable.T):
            raise InvalidFamilyParameters("the antiholomorphic part may depend on zbar only")
        antiholomorphic = antiholomorphic + g_expr

    planar = holomorphic + antiholomorphic
    if planar.is_zero():
        raise ZeroFamily("f + g vanishes")
    polynomial = Expression(Term(c, d=k) for k, c in enumerate(p) if c)
    space = "H2xR" if geometry is GeometryId.H2XR else "S2xR"
    return FamilyResult(
        family_id='product-space',
        geometry=geometry,
        expr=planar * polynomial,
        predicted_degree=r,
        prediction_source=f"{space} product (f(z) + g(zbar)) P(t) with deg P in {{2r-2, 2r-1}}: proper r-harmonic",
        prediction_status=PredictionStatus.CERTIFIED,
    )


# Dispatch

def _require(value, name: str):
    if value is None:
        raise InvalidFamilyParameters(f"parameter {name} is required", {'parameter': name})
    return value


def _axis(enum_type, value: Optional[str], default):
    if value is None:
        return default
    try:
        return enum_type(value.lower())
    except ValueError:
        raise InvalidFamilyParameters(f"invalid axis {value!r}; choose from {[a.value for a in enum_type]}")


def _polynomial_coefficients(expr: Expression, var: Variable) -> List[GaussianRational]:
    """Ascending coefficients of a polynomial in one variable."""
    degree = 0
    others = [v for v in Variable if v is not var]
    for key, _ in expr.items():
        if key.has_exponential() or any(key.exponent(v) for v in others):
            raise InvalidFamilyParameters(f"expected a polynomial in {var.value} only")
        degree = max(degree, key.exponent(var))
    coeffs = [ZERO] * (degree + 1)
    for key, c in expr.items():
        coeffs[key.exponent(var)] = c
    return coeffs


def _build_sol_harmonic(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return sol_harmonic(_require(q.n, 'n'), _axis(SolAxis, q.axis, SolAxis.Y_MAJOR), q.linear_factor)


def _build_sol_poly(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return sol_polyharmonic(_require(q.m, 'm'), _require(q.n, 'n'), term_cap)


def _build_sol_fr(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return sol_example_Fr(_require(q.r, 'r'), q.a or (0,) * 4, q.b or (0,) * 4)


def _build_sol_product(q: FamilyRequest, term_cap: int) -> FamilyResult:
    a = _coerce_all(q.a, 'a', 2)
    b = _coerce_all(q.b, 'b', 2)
    return sol_example_product(a[0], a[1], b[0], b[1])


def _build_nil_product(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return nil_product_family(_require(q.h1, 'h1'), _require(q.d, 'd'),
                              q.alpha if q.alpha is not None else 0, q.strict)


def _build_nil_monomial(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return nil_monomial_family(_require(q.m, 'm'), _require(q.n, 'n'), _require(q.alpha, 'alpha'))


def _build_nil_b(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return nil_biharmonic_B(q.b)


def _build_sl2_axis(q: FamilyRequest, term_cap: int) -> FamilyResult:
    coeffs = q.p if q.p else _polynomial_coefficients(_require(q.poly, 'poly'), Variable.T)
    return sl2_axis_family(coeffs, _axis(Sl2Axis, q.axis, Sl2Axis.Y))


def _build_sl2_f2(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return sl2_example_f2(q.b)


def _build_product_space(q: FamilyRequest, term_cap: int) -> FamilyResult:
    return product_space_family(q.geometry or GeometryId.H2XR, q.f, q.g, q.p,
                                _require(q.r, 'r'), q.f_expr, q.g_expr)


FAMILY_BUILDERS: Dict[str, Callable[[FamilyRequest, int], FamilyResult]] = {
    'sol-harmonic': _build_sol_harmonic,
    'sol-poly': _build_sol_poly,
    'sol-Fr': _build_sol_fr,
    'sol-product': _build_sol_product,
    'nil-product': _build_nil_product,
    'nil-monomial': _build_nil_monomial,
    'nil-B': _build_nil_b,
    'sl2-axis': _build_sl2_axis,
    'sl2-f2': _build_sl2_f2,
    'product-space': _build_product_space,
}


def build_family(request: FamilyRequest, term_cap: int = DEFAULT_TERM_CAP) -> FamilyResult:
    builder = FAMILY_BUILDERS.get(request.family_id)
    if builder is None:
        raise InvalidFamilyParameters(f"unknown family {request.family_id!r}",
                                      {'known': ", ".join(FAMILY_BUILDERS)})
    return builder(request, term_cap)
