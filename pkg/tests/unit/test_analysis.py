"""
Unit tests for harmonicity degree analysis.
"""

import pytest
from hypothesis import assume, given, settings, strategies as st

from src.application.services.analysis import (
    HarmonicityAnalyzer, euclidean_degree, harmonicity_degree, is_r_harmonic
)
from src.domain.algebra.expression import Expression
from src.domain.exceptions import ExpressionTooLarge, ValidationError
from src.domain.geometry.operators import GeometryId
from tests.unit.samples import F24, H, t, x, y
from tests.unit.strategies import geometries, polynomials


class TestHarmonicityDegree:
    """Test the exact degree computation."""

    def test_zero_has_degree_zero(self):
        report = harmonicity_degree(GeometryId.SOL, Expression.zero())
        assert report.degree == 0
        assert not report.proper
        assert report.chain == ()

    def test_harmonic_function(self):
        report = harmonicity_degree(GeometryId.SOL, x * y)
        assert report.degree == 1
        assert report.proper
        assert report.witness == x * y

    def test_sol_worked_example(self):
        report = harmonicity_degree(GeometryId.SOL, F24)
        assert report.degree == 2
        assert report.chain == (5, 2)
        assert report.witness == y * y * -12 + Expression.exponential(s=2) * 6

    def test_nil_monomial(self):
        assert harmonicity_degree(GeometryId.NIL, x ** 5 * y ** 2 * t ** 4).degree == 8

    def test_degree_cap(self):
        """Test e^t is an eigenfunction of tau on Sol and never vanishes."""
        report = harmonicity_degree(GeometryId.SOL, Expression.exponential(s=1), max_r=5)
        assert report.exceeded
        assert report.describe() == "Exceeded(5)"
        assert len(report.chain) == 5

    def test_invalid_cap(self):
        with pytest.raises(ValidationError):
            harmonicity_degree(GeometryId.SOL, x, max_r=0)

    def test_term_cap_reports_iteration(self):
        with pytest.raises(ExpressionTooLarge) as exc_info:
            harmonicity_degree(GeometryId.SOL, F24, term_cap=4)
        assert exc_info.value.iteration == 1

    def test_product_space_polynomial_in_t(self):
        """Test z t^2 is proper biharmonic on H2xR."""
        assert harmonicity_degree(GeometryId.H2XR, x * t * t).degree == 2


class TestIsRHarmonic:
    """Test the r-harmonic predicate."""

    def test_biharmonic_is_not_harmonic(self):
        assert is_r_harmonic(GeometryId.SOL, F24, 2)
        assert not is_r_harmonic(GeometryId.SOL, F24, 1)

    def test_higher_r_holds(self):
        assert is_r_harmonic(GeometryId.SOL, t * t, 5)

    def test_invalid_r(self):
        with pytest.raises(ValidationError):
            is_r_harmonic(GeometryId.SOL, t, 0)


class TestDegreeProperties:
    """Test the algebraic laws of the degree."""

    @settings(max_examples=40, deadline=None)
    @given(geometries, polynomials, st.integers(min_value=1, max_value=3))
    def test_r_harmonic_is_monotone_in_r(self, g, f, r):
        if is_r_harmonic(g, f, r):
            assert is_r_harmonic(g, f, r + 1)

    @settings(max_examples=40, deadline=None)
    @given(polynomials)
    def test_degree_is_the_first_r(self, f):
        """Test the reported degree on Nil, where tau is nilpotent on polynomials."""
        degree = harmonicity_degree(GeometryId.NIL, f).degree
        assume(degree > 0)
        assert is_r_harmonic(GeometryId.NIL, f, degree)
        assert is_r_harmonic(GeometryId.NIL, f, degree + 1)
        if degree > 1:
            assert not is_r_harmonic(GeometryId.NIL, f, degree - 1)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([GeometryId.NIL, GeometryId.SL2R]), polynomials, polynomials)
    def test_degree_of_sum(self, g, f, h):
        first = harmonicity_degree(g, f, max_r=10).degree
        second = harmonicity_degree(g, h, max_r=10).degree
        assume(first is not None and second is not None)
        total = harmonicity_degree(g, f + h, max_r=10).degree
        assert total is not None
        assert total <= max(first, second)


class TestEuclideanDegree:
    """Test the flat planar base cases."""

    @pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (3, 2), (4, 4), (5, 1)])
    def test_monomials(self, m, n):
        assert euclidean_degree(x ** m * y ** n).degree == m // 2 + n // 2 + 1

    @pytest.mark.parametrize("d", [0, 1, 2, 3])
    def test_harmonic_exponential_times_power(self, d):
        """Test e^x cos(y) x^d is proper (d+1)-harmonic on the plane."""
        report = euclidean_degree(H * x ** d)
        assert report.degree == d + 1
        assert report.proper


class TestHarmonicityAnalyzer:
    """Test the logging service wrapper."""

    def test_logs_each_iteration(self, mock_logger):
        analyzer = HarmonicityAnalyzer(mock_logger, max_r=10)
        report = analyzer.degree(GeometryId.SOL, t ** 4)

        assert report.degree == 3
        assert mock_logger.debug.call_count == 3
        mock_logger.info.assert_called_once()
        assert mock_logger.info.call_args.kwargs['degree'] == "3"

    def test_explicit_cap_overrides_default(self, mock_logger):
        analyzer = HarmonicityAnalyzer(mock_logger, max_r=10)
        assert analyzer.degree(GeometryId.SOL, t ** 4, max_r=2).exceeded

    def test_euclidean_degree(self, mock_logger):
        analyzer = HarmonicityAnalyzer(mock_logger)
        assert analyzer.euclidean_degree(x * x).degree == 2
        assert analyzer.is_r_harmonic(GeometryId.NIL, y * t, 2)
