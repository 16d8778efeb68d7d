"""
Exact complex numbers with rational real and imaginary parts.
"""

from fractions import Fraction
from functools import total_ordering
from typing import Any, Dict, Tuple, Union

Rational = Union[int, Fraction]
Scalar = Union[int, Fraction, 'GaussianRational']


def _to_fraction(value: Union[int, Fraction, str]) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"inexact or boolean value not allowed: {value!r}")
    return Fraction(value)


@total_ordering
class GaussianRational:
    """
    Immutable Gaussian rational ``re + im*i``.

    Both parts are ``fractions.Fraction`` values, so they are always kept in
    lowest terms with a positive denominator; equality is structural. The
    ordering compares ``(re, im)`` lexicographically and only exists so that
    terms can be sorted deterministically.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        object.__setattr__(self, "_re", _to_fraction(re))
        object.__setattr__(self, "_im", _to_fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> 'GaussianRational':
        obj = object.__new__(cls)
        object.__setattr__(obj, "_re", re)
        object.__setattr__(obj, "_im", im)
        return obj

    @classmethod
    def coerce(cls, value: Scalar) -> 'GaussianRational':
        """Lift an int or Fraction into the Gaussian rationals."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls._make(Fraction(value), _ZERO_FRACTION)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self._re, self._im))

    # Parts

    @property
    def real(self) -> Fraction:
        return self._re

    @property
    def imag(self) -> Fraction:
        return self._im

    @property
    def re_num(self) -> int:
        return self._re.numerator

    @property
    def re_den(self) -> int:
        return self._re.denominator

    @property
    def im_num(self) -> int:
        return self._im.numerator

    @property
    def im_den(self) -> int:
        return self._im.denominator

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self._re, self._im)

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational._make(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus."""
        return self._re * self._re + self._im * self._im

    # Arithmetic

    def __add__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._make(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational._make(self._re - o._re, self._im - o._im)

    def __rsub__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self._im and not o._im:
            return GaussianRational._make(self._re * o._re, _ZERO_FRACTION)
        return GaussianRational._make(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        if not o._im:
            return GaussianRational._make(self._re / o._re, self._im / o._re)
        denominator = o.norm()
        numerator = self * o.conjugate()
        return GaussianRational._make(numerator._re / denominator, numerator._im / denominator)

    def __rtruediv__(self, other: Scalar) -> 'GaussianRational':
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational._make(-self._re, -self._im)

    def __pos__(self) -> 'GaussianRational':
        return self

    def __pow__(self, exponent: int) -> 'GaussianRational':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return not self._im and self._re == other
        return NotImplemented

    def __lt__(self, other: 'GaussianRational') -> bool:
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))

    # Text

    def __repr__(self) -> str:
        return f"GaussianRational('{self._re}', '{self._im}')"

    def __str__(self) -> str:
        if not self._im:
            return str(self._re)
        if not self._re:
            return f"{self._im}*i"
        sign = "+" if self._im > 0 else "-"
        return f"({self._re} {sign} {abs(self._im)}*i)"

    def to_json(self) -> Dict[str, str]:
        """Rational-pair object with explicit ``num/den`` strings."""
        return {
            "re": f"{self._re.numerator}/{self._re.denominator}",
            "im": f"{self._im.numerator}/{self._im.denominator}",
        }

    @classmethod
    def from_json(cls, data: Dict[str, str]) -> 'GaussianRational':
        return cls(data.get("re", 0), data.get("im", 0))


_ZERO_FRACTION = Fraction(0)

ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
