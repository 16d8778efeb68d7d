"""
Unit tests for the tau and kappa operators.
"""

import pytest
from hypothesis import given, settings

from src.domain.algebra.expression import Expression
from src.domain.exceptions import DependsOnT, ExpressionTooLarge, ValidationError
from src.domain.geometry.operators import (
    GeometryId, euclidean_laplacian_2d, iterate_tau, kappa, operator_table, tau
)
from tests.unit.samples import F24, exp_t, t, x, y
from tests.unit.strategies import complex_weights, expressions, gaussian_rationals, geometries

z, zc = x, y


class TestGeometryId:
    """Test geometry name parsing."""

    def test_from_string(self):
        assert GeometryId.from_string("Sol") is GeometryId.SOL
        assert GeometryId.from_string(" nil ") is GeometryId.NIL
        assert GeometryId.from_string("sl2r") is GeometryId.SL2R
        assert GeometryId.from_string("h2xr") is GeometryId.H2XR

    def test_unknown_geometry(self):
        with pytest.raises(ValidationError, match="unknown geometry"):
            GeometryId.from_string("euclid")

    def test_complex_geometries(self):
        assert GeometryId.H2XR.is_complex
        assert GeometryId.S2XR.is_complex
        assert not GeometryId.SOL.is_complex

    def test_derived_tables_are_marked(self):
        assert operator_table(GeometryId.SL2R).derived_kappa
        assert operator_table(GeometryId.S2XR).derived_tau
        assert not operator_table(GeometryId.SOL).derived_tau


class TestTau:
    """Test tau on known inputs."""

    def test_sol_t_squared(self):
        assert tau(GeometryId.SOL, t * t) == 2

    def test_nil_yt(self):
        assert tau(GeometryId.NIL, y * t) == x * 2

    def test_sol_worked_example(self):
        """Test tau(f_{2,4}) = -12 y^2 + 6 e^(2t) and tau^2(f_{2,4}) = 0."""
        assert tau(GeometryId.SOL, F24) == y * y * -12 + exp_t(2) * 6
        assert iterate_tau(GeometryId.SOL, F24, 2).is_zero()

    def test_sl2_xt(self):
        assert tau(GeometryId.SL2R, x * t) == y * -2

    def test_h2xr_z_zbar(self):
        """Test tau(z zbar) = 4 (1 - z zbar)^2."""
        assert tau(GeometryId.H2XR, z * zc) == (1 - z * zc) ** 2 * 4

    def test_s2xr_z_zbar(self):
        assert tau(GeometryId.S2XR, z * zc) == (1 + z * zc) ** 2

    def test_holomorphic_is_harmonic_on_product_spaces(self):
        f = Expression.exponential(p=1) + z ** 3
        assert tau(GeometryId.H2XR, f).is_zero()
        assert tau(GeometryId.S2XR, f).is_zero()

    def test_iterate_stops_at_zero(self):
        assert iterate_tau(GeometryId.SOL, t ** 2, 10).is_zero()
        assert iterate_tau(GeometryId.SOL, t ** 2, 0) == t ** 2

    def test_iterate_reports_iteration_at_cap(self):
        with pytest.raises(ExpressionTooLarge) as exc_info:
            iterate_tau(GeometryId.SOL, F24, 3, term_cap=4)
        assert exc_info.value.iteration == 1
        assert "reached at iteration 1" in str(exc_info.value)

    @settings(max_examples=40, deadline=None)
    @given(geometries, expressions(3, complex_weights), expressions(3, complex_weights), gaussian_rationals)
    def test_linearity(self, g, f, h, c):
        assert tau(g, f * c + h) == tau(g, f) * c + tau(g, h)


class TestKappa:
    """Test the conformality operator."""

    def test_sol_kappa(self):
        """Test kappa(x, x) = e^(-2t) on Sol."""
        assert kappa(GeometryId.SOL, x, x) == exp_t(-2)

    def test_nil_kappa_mixed_term(self):
        """Test kappa(y, t) = x on Nil."""
        assert kappa(GeometryId.NIL, y, t) == x

    def test_sl2_kappa_mixed_term(self):
        assert kappa(GeometryId.SL2R, x, t) == -y

    def test_h2xr_kappa(self):
        """Test kappa(z, zbar) = 2 (1 - z zbar)^2 on H2xR."""
        assert kappa(GeometryId.H2XR, z, zc) == (1 - z * zc) ** 2 * 2

    def test_s2xr_kappa(self):
        """Test 2 kappa(z, zbar) = (1 + z zbar)^2 on S2xR."""
        assert kappa(GeometryId.S2XR, z, zc) * 2 == (1 + z * zc) ** 2
        assert kappa(GeometryId.S2XR, t, t) == 1
        assert kappa(GeometryId.S2XR, z, z).is_zero()

    @pytest.mark.parametrize("g", [GeometryId.H2XR, GeometryId.S2XR])
    def test_product_rule_on_z_zbar(self, g):
        assert tau(g, z * zc) == z * tau(g, zc) + zc * tau(g, z) + kappa(g, z, zc) * 2

    @settings(max_examples=40, deadline=None)
    @given(geometries, expressions(3, complex_weights), expressions(3, complex_weights))
    def test_symmetry(self, g, f, h):
        assert kappa(g, f, h) == kappa(g, h, f)

    @settings(max_examples=40, deadline=None)
    @given(geometries, expressions(3, complex_weights), expressions(3, complex_weights), gaussian_rationals)
    def test_bilinearity(self, g, f, h, c):
        assert kappa(g, f * c + h, h) == kappa(g, f, h) * c + kappa(g, h, h)

    @pytest.mark.parametrize("g", list(GeometryId))
    @settings(max_examples=100, deadline=None)
    @given(expressions(3, complex_weights), expressions(3, complex_weights))
    def test_product_rule(self, g, f, h):
        """Test tau(fh) = f tau(h) + h tau(f) + 2 kappa(f, h)."""
        assert tau(g, f * h) == f * tau(g, h) + h * tau(g, f) + kappa(g, f, h) * 2


class TestEuclideanLaplacian:
    """Test the flat planar Laplacian."""

    def test_harmonic_polynomial(self):
        assert euclidean_laplacian_2d(x * x - y * y).is_zero()

    def test_rejects_t(self):
        with pytest.raises(DependsOnT):
            euclidean_laplacian_2d(x * t)
