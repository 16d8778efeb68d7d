"""
Unit tests for exact linear algebra and the matrix of tau.
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.application.services.linalg import (
    expression_to_vector, matrix_of_tau, vector_to_expression
)
from src.domain.algebra.expression import Expression, Term, Variable
from src.domain.algebra.gaussian import GaussianRational, ONE
from src.domain.algebra.matrix import (
    ExactMatrix, mat_pow, nullspace, rank, row_reduce, solve_in_span
)
from src.domain.exceptions import DimensionMismatch, EscapesBasis, ValidationError
from src.domain.geometry.operators import GeometryId, tau
from tests.unit.strategies import gaussian_rationals


def matrix(rows):
    return ExactMatrix.from_rows([[GaussianRational(v) for v in row] for row in rows])


@st.composite
def small_matrices(draw):
    n_rows = draw(st.integers(min_value=1, max_value=4))
    n_cols = draw(st.integers(min_value=1, max_value=5))
    entries = draw(st.lists(gaussian_rationals | st.just(GaussianRational(0)),
                            min_size=n_rows * n_cols, max_size=n_rows * n_cols))
    return ExactMatrix(n_rows, n_cols, tuple(entries))


class TestExactMatrix:
    """Test construction and products."""

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ExactMatrix(2, 2, (ONE,) * 3)

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatch):
            ExactMatrix.from_rows([[1, 2], [3]])

    def test_product(self):
        a = matrix([[1, 2], [3, 4]])
        assert (a @ a) == matrix([[7, 10], [15, 22]])

    def test_inner_dimension_check(self):
        with pytest.raises(DimensionMismatch):
            matrix([[1, 2]]) @ matrix([[1, 2]])

    def test_mat_pow(self):
        shift = matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert mat_pow(shift, 0) == ExactMatrix.identity(3)
        assert not mat_pow(shift, 2).is_zero()
        assert mat_pow(shift, 3).is_zero()

    def test_mat_pow_needs_square(self):
        with pytest.raises(DimensionMismatch):
            mat_pow(matrix([[1, 2]]), 2)


class TestElimination:
    """Test row reduction and kernels."""

    def test_rank(self):
        assert rank(matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])) == 2

    def test_row_reduce(self):
        reduced, pivots = row_reduce(matrix([[2, 4], [1, 3]]))
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    def test_nullspace_basis(self):
        kernel = nullspace(matrix([[1, 2, 3]]))
        assert kernel == [
            (GaussianRational(-2), ONE, GaussianRational(0)),
            (GaussianRational(-3), GaussianRational(0), ONE),
        ]

    def test_complex_entries(self):
        m = ExactMatrix.from_rows([[GaussianRational(0, 1), ONE]])
        (vector,) = nullspace(m)
        assert m.apply(vector) == (GaussianRational(0),)

    @settings(max_examples=60)
    @given(small_matrices())
    def test_nullspace_is_kernel(self, m):
        kernel = nullspace(m)
        assert len(kernel) == m.cols - rank(m)
        for vector in kernel:
            assert not any(m.apply(vector))

    def test_solve_in_span(self):
        columns = [[1, 0, 1], [0, 1, 1]]
        assert solve_in_span(columns, [2, 3, 5]) == (GaussianRational(2), GaussianRational(3))
        assert solve_in_span(columns, [1, 1, 0]) is None


class TestMatrixOfTau:
    """Test tau restricted to a finite basis."""

    def test_columns_are_images(self):
        """Test on Sol: tau(t^2) = 2 and tau(t^3) = 6t."""
        basis = [Term(ONE), Term(ONE, d=1), Term(ONE, d=2), Term(ONE, d=3)]
        m = matrix_of_tau(GeometryId.SOL, basis)
        assert m.column(2) == (GaussianRational(2), 0, 0, 0)
        assert m.column(3) == (0, GaussianRational(6), 0, 0)

    def test_escapes_basis(self):
        with pytest.raises(EscapesBasis):
            matrix_of_tau(GeometryId.SOL, [Term(ONE, d=2)])

    def test_duplicate_basis(self):
        with pytest.raises(ValidationError):
            matrix_of_tau(GeometryId.SOL, [Term(ONE, d=1), Term(GaussianRational(2), d=1)])

    def test_vector_round_trip_respects_basis_scale(self):
        basis = [Term(GaussianRational(2), a=1), Term(GaussianRational(3), b=1)]
        f = Expression.variable(Variable.U)
        vector = expression_to_vector(f, basis)
        assert vector == (GaussianRational("1/2"), GaussianRational(0))
        assert vector_to_expression(vector, basis) == f

    def test_matrix_agrees_with_tau(self):
        basis = [Term(ONE, a=2, b=2), Term(ONE, b=2, s=GaussianRational(-2)),
                 Term(ONE, a=2, s=GaussianRational(2)), Term(ONE)]
        m = matrix_of_tau(GeometryId.SOL, basis)
        vector = (ONE, GaussianRational(3), GaussianRational(-1), GaussianRational(5))
        f = vector_to_expression(vector, basis)
        assert vector_to_expression(m.apply(vector), basis) == tau(GeometryId.SOL, f)
