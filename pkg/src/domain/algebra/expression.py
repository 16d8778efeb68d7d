"""
Canonical term algebra.

An Expression is a finite sum of terms ``c * u^a v^b t^d * exp(p*u + q*v + s*t)``
with Gaussian-rational coefficients and exponential weights. The functions
``u^a v^b t^d e^(pu+qv+st)`` are linearly independent, so an expression with
no stored terms is exactly the zero function.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from src.domain.algebra.gaussian import GaussianRational, Scalar, ZERO, ONE
from src.domain.exceptions import ExpressionTooLarge

DEFAULT_TERM_CAP = 100_000


class Variable(Enum):
    """Abstract algebra variables; geometries read (u, v) as (x, y) or (z, zbar)."""
    U = "u"
    V = "v"
    T = "t"


class TermKey(NamedTuple):
    """Identifies one basis function of the term algebra."""
    a: int
    b: int
    d: int
    p: GaussianRational
    q: GaussianRational
    s: GaussianRational

    def exponent(self, var: Variable) -> int:
        return self.a if var is Variable.U else self.b if var is Variable.V else self.d

    def weight(self, var: Variable) -> GaussianRational:
        return self.p if var is Variable.U else self.q if var is Variable.V else self.s

    def times(self, other: 'TermKey') -> 'TermKey':
        return TermKey(self.a + other.a, self.b + other.b, self.d + other.d,
                       self.p + other.p, self.q + other.q, self.s + other.s)

    def lowered(self, var: Variable) -> 'TermKey':
        if var is Variable.U:
            return self._replace(a=self.a - 1)
        if var is Variable.V:
            return self._replace(b=self.b - 1)
        return self._replace(d=self.d - 1)

    def has_exponential(self) -> bool:
        return bool(self.p) or bool(self.q) or bool(self.s)


ONE_KEY = TermKey(0, 0, 0, ZERO, ZERO, ZERO)


def order_key(key: TermKey) -> tuple:
    """Deterministic total order on keys: (s, p, q, d, a, b)."""
    return (key.s.sort_key(), key.p.sort_key(), key.q.sort_key(), key.d, key.a, key.b)


@dataclass(frozen=True)
class Term:
    """One coefficient-weighted basis function."""
    coeff: GaussianRational
    a: int = 0
    b: int = 0
    d: int = 0
    p: GaussianRational = ZERO
    q: GaussianRational = ZERO
    s: GaussianRational = ZERO

    def __post_init__(self):
        for name in ("a", "b", "d"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"exponent {name} must be a natural number, got {value!r}")
        for name in ("coeff", "p", "q", "s"):
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))

    @property
    def key(self) -> TermKey:
        return TermKey(self.a, self.b, self.d, self.p, self.q, self.s)

    @classmethod
    def from_key(cls, key: TermKey, coeff: Scalar = ONE) -> 'Term':
        return cls(GaussianRational.coerce(coeff), key.a, key.b, key.d, key.p, key.q, key.s)


def _check_cap(count: int, term_cap: int) -> None:
    if count > term_cap:
        raise ExpressionTooLarge(count, term_cap)


def _canonical(accumulator: Dict[TermKey, GaussianRational]) -> Dict[TermKey, GaussianRational]:
    return {key: accumulator[key]
            for key in sorted((k for k, c in accumulator.items() if c), key=order_key)}


class Expression:
    """Immutable canonical sum of terms; use the module functions or operators to combine."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Iterable[Term]] = None):
        accumulator: Dict[TermKey, GaussianRational] = {}
        for term in terms or ():
            key = term.key
            accumulator[key] = accumulator.get(key, ZERO) + term.coeff
        object.__setattr__(self, "_terms", _canonical(accumulator))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _from_canonical(cls, terms: Dict[TermKey, GaussianRational]) -> 'Expression':
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def _from_accumulator(cls, accumulator: Dict[TermKey, GaussianRational]) -> 'Expression':
        return cls._from_canonical(_canonical(accumulator))

    def __setattr__(self, name, value):
        raise AttributeError("Expression is immutable")

    # Constructors

    @classmethod
    def zero(cls) -> 'Expression':
        return cls._from_canonical({})

    @classmethod
    def constant(cls, value: Scalar) -> 'Expression':
        c = GaussianRational.coerce(value)
        return cls._from_canonical({ONE_KEY: c} if c else {})

    @classmethod
    def one(cls) -> 'Expression':
        return cls.constant(ONE)

    @classmethod
    def monomial(cls, coeff: Scalar = ONE, a: int = 0, b: int = 0, d: int = 0,
                 p: Scalar = ZERO, q: Scalar = ZERO, s: Scalar = ZERO) -> 'Expression':
        return cls([Term(GaussianRational.coerce(coeff), a, b, d, p, q, s)])

    @classmethod
    def variable(cls, var: Variable) -> 'Expression':
        exponents = {Variable.U: (1, 0, 0), Variable.V: (0, 1, 0), Variable.T: (0, 0, 1)}[var]
        return cls.monomial(ONE, *exponents)

    @classmethod
    def exponential(cls, p: Scalar = ZERO, q: Scalar = ZERO, s: Scalar = ZERO) -> 'Expression':
        return cls.monomial(ONE, p=p, q=q, s=s)

    # Inspection

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        for key, coeff in self._terms.items():
            yield Term.from_key(key, coeff)

    def items(self) -> Iterator[Tuple[TermKey, GaussianRational]]:
        return iter(self._terms.items())

    def keys(self) -> List[TermKey]:
        return list(self._terms)

    def coefficient(self, key: TermKey) -> GaussianRational:
        return self._terms.get(key, ZERO)

    def constant_value(self) -> Optional[GaussianRational]:
        """The value if the expression is a constant, else None."""
        if not self._terms:
            return ZERO
        if len(self._terms) == 1 and ONE_KEY in self._terms:
            return self._terms[ONE_KEY]
        return None

    def depends_on(self, var: Variable) -> bool:
        return any(key.exponent(var) or key.weight(var) for key in self._terms)

    # Algebra

    def diff(self, var: Variable) -> 'Expression':
        return diff(self, var)

    def scale(self, c: Scalar) -> 'Expression':
        return scalar_mul(c, self)

    def __add__(self, other: Union['Expression', Scalar]) -> 'Expression':
        if not isinstance(other, Expression):
            try:
                other = Expression.constant(other)
            except TypeError:
                return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> 'Expression':
        return Expression._from_canonical({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Union['Expression', Scalar]) -> 'Expression':
        if not isinstance(other, Expression):
            try:
                other = Expression.constant(other)
            except TypeError:
                return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: Scalar) -> 'Expression':
        try:
            return Expression.constant(other) - self
        except TypeError:
            return NotImplemented

    def __mul__(self, other: Union['Expression', Scalar]) -> 'Expression':
        if isinstance(other, Expression):
            return mul(self, other)
        try:
            return scalar_mul(GaussianRational.coerce(other), self)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Expression':
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Expression.one()
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Expression):
            return self._terms == other._terms
        if isinstance(other, (int, GaussianRational)) and not isinstance(other, bool):
            return self._terms == Expression.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        parts = [f"{c}*[{k.a},{k.b},{k.d};{k.p},{k.q},{k.s}]" for k, c in self._terms.items()]
        return f"Expression({' + '.join(parts) or '0'})"


def normalize(raw: Iterable[Term]) -> Expression:
    """Merge equal keys, drop zero coefficients and sort."""
    return Expression(raw)


def add(f: Expression, g: Expression, term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    accumulator = dict(f._terms)
    for key, coeff in g._terms.items():
        accumulator[key] = accumulator.get(key, ZERO) + coeff
    result = Expression._from_accumulator(accumulator)
    _check_cap(result.term_count, term_cap)
    return result


def mul(f: Expression, g: Expression, term_cap: int = DEFAULT_TERM_CAP) -> Expression:
    accumulator: Dict[TermKey, GaussianRational] = {}
    for k1, c1 in f._terms.items():
        for k2, c2 in g._terms.items():
            key = k1.times(k2)
            accumulator[key] = accumulator.get(key, ZERO) + c1 * c2
    result = Expression._from_accumulator(accumulator)
    _check_cap(result.term_count, term_cap)
    return result


def diff(f: Expression, var: Variable) -> Expression:
    """Partial derivative; d/du (u^a e^(pu)) = a u^(a-1) e^(pu) + p u^a e^(pu)."""
    accumulator: Dict[TermKey, GaussianRational] = {}
    for key, coeff in f._terms.items():
        exponent = key.exponent(var)
        if exponent:
            lowered = key.lowered(var)
            accumulator[lowered] = accumulator.get(lowered, ZERO) + coeff * exponent
        weight = key.weight(var)
        if weight:
            accumulator[key] = accumulator.get(key, ZERO) + coeff * weight
    return Expression._from_accumulator(accumulator)


def scalar_mul(c: Scalar, f: Expression) -> Expression:
    c = GaussianRational.coerce(c)
    if not c:
        return Expression.zero()
    return Expression._from_canonical({k: coeff * c for k, coeff in f._terms.items()})


def is_zero(f: Expression) -> bool:
    return f.is_zero()


def derivative(f: Expression, orders: Tuple[int, int, int]) -> Expression:
    """Mixed partial derivative with multi-index (order in u, order in v, order in t)."""
    result = f
    for var, order in zip((Variable.U, Variable.V, Variable.T), orders):
        for _ in range(order):
            result = diff(result, var)
    return result
