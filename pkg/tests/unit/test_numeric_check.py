"""
Unit tests for the finite-difference oracle.
"""

import numpy as np
import pytest
from hypothesis import given, settings

from src.application.services.numeric_check import (
    CompiledExpression, NumericOracle, cross_check, eval_expression, fd_tau,
    max_error, relative_error, richardson_ratio, sample_points
)
from src.domain.algebra.expression import Expression, Term
from src.domain.algebra.gaussian import GaussianRational
from src.domain.exceptions import InvalidPoint, ValidationError
from src.domain.geometry.operators import GeometryId
from src.domain.models.entities import EvalPoint
from tests.unit.samples import exp_t, t, x, y
from tests.unit.strategies import complex_weights, expressions

z, zc = x, y
exp_x = Expression.exponential(p=1)

SMOOTH_EXAMPLES = [
    (GeometryId.SOL, x * x * y * y + exp_t(1) * x),
    (GeometryId.NIL, exp_x * y * t + x ** 3 * t ** 2),
    (GeometryId.SL2R, x * t ** 3 + y * y + exp_t(1) * y),
    (GeometryId.H2XR, z * zc * t * t + z ** 3),
    (GeometryId.S2XR, z * z * zc + t ** 3),
]

RICHARDSON_CASES = [
    (GeometryId.NIL, exp_x, EvalPoint(0.2, 0.1, 0.3)),
    (GeometryId.SOL, Expression.exponential(p=1, s=1), EvalPoint(0.2, 0.1, 0.3)),
    (GeometryId.S2XR, Expression.exponential(p=1, q=1), EvalPoint(0.2, 0.1, 0.3)),
]


def _small_gaussian(rng) -> GaussianRational:
    re, im = (int(v) for v in rng.integers(-1, 2, size=2))
    return GaussianRational(re, im)


def random_expression(rng) -> Expression:
    """One to three terms with small exponents and complex exponential weights."""
    terms = []
    for _ in range(int(rng.integers(1, 4))):
        coeff = _small_gaussian(rng)
        if coeff.is_zero():
            coeff = GaussianRational(1)
        a, b, d = (int(v) for v in rng.integers(0, 3, size=3))
        terms.append(Term(coeff, a, b, d, _small_gaussian(rng), _small_gaussian(rng), _small_gaussian(rng)))
    return Expression(terms)


class TestEvaluation:
    """Test floating-point evaluation of exact expressions."""

    def test_real_geometry(self):
        value = eval_expression(x * y + t, EvalPoint(1.0, 2.0, 3.0), GeometryId.SOL)
        assert value == pytest.approx(5.0)

    def test_complex_geometry(self):
        """Test z zbar evaluates to |z|^2."""
        value = eval_expression(z * zc, EvalPoint(0.3, 0.4, 0.0), GeometryId.H2XR)
        assert value == pytest.approx(0.25)

    def test_zero_expression(self):
        assert CompiledExpression(Expression.zero()).at(1, 2, 3) == 0j

    def test_point_outside_disc(self):
        with pytest.raises(InvalidPoint):
            eval_expression(z, EvalPoint(0.9, 0.9, 0.0), GeometryId.H2XR)

    def test_point_too_close_to_boundary_on_sl2(self):
        with pytest.raises(InvalidPoint):
            eval_expression(y, EvalPoint(0.0, 0.05, 0.0), GeometryId.SL2R)


class TestFiniteDifferences:
    """Test the stencil against exact tau."""

    def test_fd_tau_of_quadratic(self):
        assert fd_tau(GeometryId.SOL, t * t, EvalPoint(0.1, 0.2, 0.3)) == pytest.approx(2.0, abs=1e-6)

    def test_fd_tau_rejects_bad_step(self):
        with pytest.raises(ValidationError):
            fd_tau(GeometryId.SOL, t, EvalPoint(0.0, 0.0, 0.0), h=0.0)

    @pytest.mark.parametrize("geometry,f", SMOOTH_EXAMPLES)
    def test_cross_check_passes(self, geometry, f):
        reports = cross_check(geometry, f, n_points=5)
        assert len(reports) == 5
        assert all(report.passed for report in reports)

    @pytest.mark.parametrize("geometry", list(GeometryId))
    def test_random_expressions_agree_with_stencil(self, geometry):
        rng = np.random.default_rng(1729)
        for index in range(50):
            f = random_expression(rng)
            report = cross_check(geometry, f, n_points=1, seed=index)[0]
            assert report.rel_error < 1e-6, (index, f)

    @pytest.mark.parametrize("geometry,f,point", RICHARDSON_CASES)
    def test_richardson_ratio_is_about_four(self, geometry, f, point):
        """Test the stencil is second order: halving h divides the error by four."""
        ratio = richardson_ratio(geometry, f, point, h=1e-2)
        assert 3.5 < ratio < 4.5

    def test_relative_error(self):
        assert relative_error(10.0, 11.0) == pytest.approx(0.1)
        assert relative_error(0.0, 1e-7) == pytest.approx(1e-7)

    def test_max_error(self):
        assert max_error([]) == 0.0


class TestZeroTest:
    """Test the exact zero test against numeric evaluation."""

    POINTS = sample_points(GeometryId.SOL, 10, seed=11)

    @settings(max_examples=200, deadline=None)
    @given(expressions(weights=complex_weights))
    def test_is_zero_agrees_with_samples(self, f):
        for candidate in (f, f - f):
            values = [abs(eval_expression(candidate, p, GeometryId.SOL)) for p in self.POINTS]
            if candidate.is_zero():
                assert max(values) == 0.0
            else:
                assert max(values) > 1e-12


class TestSamplePoints:
    """Test deterministic sampling of admissible points."""

    def test_same_seed_same_points(self):
        assert sample_points(GeometryId.SOL, 6, seed=7) == sample_points(GeometryId.SOL, 6, seed=7)
        assert sample_points(GeometryId.SOL, 6, seed=7) != sample_points(GeometryId.SOL, 6, seed=8)

    @pytest.mark.parametrize("geometry", list(GeometryId))
    def test_points_are_admissible(self, geometry):
        for point in sample_points(geometry, 20, radius=0.5):
            point.validate_for(geometry)
            assert max(abs(c) for c in point.as_tuple()) <= 0.5

    def test_h2xr_disc_is_capped(self):
        for point in sample_points(GeometryId.H2XR, 20, radius=5.0):
            assert point.x ** 2 + point.y ** 2 < 0.8 ** 2

    def test_sl2_avoids_small_y(self):
        for point in sample_points(GeometryId.SL2R, 20):
            assert abs(point.y) > 0.1

    def test_sl2_radius_too_small(self):
        with pytest.raises(InvalidPoint):
            sample_points(GeometryId.SL2R, 3, radius=0.05)

    def test_needs_a_point(self):
        with pytest.raises(ValidationError):
            sample_points(GeometryId.SOL, 0)


class TestNumericOracle:
    """Test the logging service wrapper."""

    def test_logs_summary_on_success(self, mock_logger):
        oracle = NumericOracle(mock_logger, n_points=3)
        reports = oracle.check(GeometryId.NIL, exp_x * y)
        assert len(reports) == 3
        mock_logger.info.assert_called_once()
        assert mock_logger.info.call_args.kwargs['failed'] == 0

    def test_warns_when_tolerance_is_missed(self, mock_logger):
        oracle = NumericOracle(mock_logger, n_points=3, tol=1e-300)
        reports = oracle.check(GeometryId.NIL, exp_x)
        assert not all(report.passed for report in reports)
        mock_logger.warning.assert_called_once()
