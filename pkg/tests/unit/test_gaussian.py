"""
Unit tests for Gaussian rational arithmetic.
"""

from fractions import Fraction

import pytest
from hypothesis import given

from src.domain.algebra.gaussian import GaussianRational, I, ONE, ZERO
from tests.unit.strategies import gaussian_rationals, nonzero_gaussian_rationals


class TestCanonicalForm:
    """Test lowest-terms storage and structural equality."""

    def test_parts_are_reduced(self):
        """Test numerator and denominator are kept in lowest terms."""
        c = GaussianRational(Fraction(6, -4), Fraction(0, 7))
        assert (c.re_num, c.re_den) == (-3, 2)
        assert (c.im_num, c.im_den) == (0, 1)

    def test_equality_is_structural(self):
        """Test equal values compare and hash equal."""
        assert GaussianRational("2/4", 1) == GaussianRational(Fraction(1, 2), 1)
        assert hash(GaussianRational(3)) == hash(3)
        assert GaussianRational(3) == 3
        assert GaussianRational(3, 1) != 3

    def test_rejects_inexact_values(self):
        """Test floats and booleans are refused."""
        with pytest.raises(TypeError):
            GaussianRational(0.5)
        with pytest.raises(TypeError):
            GaussianRational(True)

    def test_is_immutable(self):
        """Test attribute assignment fails."""
        with pytest.raises(AttributeError):
            ONE._re = Fraction(2)

    def test_total_order_is_lexicographic(self):
        """Test ordering compares (re, im)."""
        values = [GaussianRational(1, 5), GaussianRational(0, 9), GaussianRational(1, -1)]
        assert sorted(values) == [GaussianRational(0, 9), GaussianRational(1, -1), GaussianRational(1, 5)]


class TestArithmetic:
    """Test field operations."""

    def test_i_squared_is_minus_one(self):
        assert I * I == -1

    def test_division(self):
        """Test (1 + 2i) / (3 - 4i) = (-1 + 2i) / 5."""
        assert GaussianRational(1, 2) / GaussianRational(3, -4) == GaussianRational("-1/5", "2/5")

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_negative_power(self):
        assert GaussianRational(2) ** -2 == GaussianRational("1/4")
        assert I ** 4 == ONE

    def test_mixed_with_int_and_fraction(self):
        assert 2 + GaussianRational(1, 1) == GaussianRational(3, 1)
        assert Fraction(1, 2) * GaussianRational(2, 4) == GaussianRational(1, 2)

    @given(gaussian_rationals, gaussian_rationals, gaussian_rationals)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(gaussian_rationals, nonzero_gaussian_rationals)
    def test_division_inverts_multiplication(self, a, b):
        assert (a * b) / b == a

    @given(gaussian_rationals)
    def test_conjugate_product_is_norm(self, a):
        assert a * a.conjugate() == a.norm()


class TestText:
    """Test string and json forms."""

    def test_str(self):
        assert str(GaussianRational("3/4")) == "3/4"
        assert str(GaussianRational(0, -2)) == "-2*i"
        assert str(GaussianRational(1, "-1/2")) == "(1 - 1/2*i)"

    def test_json_uses_explicit_fractions(self):
        assert GaussianRational(2, "-1/3").to_json() == {"re": "2/1", "im": "-1/3"}

    @given(gaussian_rationals)
    def test_json_round_trip(self, a):
        assert GaussianRational.from_json(a.to_json()) == a

    def test_complex_conversion(self):
        assert complex(GaussianRational("1/2", -3)) == complex(0.5, -3.0)
