"""
Matrix of tau on a finite term basis.
"""

from typing import Dict, List, Sequence

from src.domain.algebra.expression import DEFAULT_TERM_CAP, Expression, Term, TermKey
from src.domain.algebra.gaussian import GaussianRational, Scalar, ZERO
from src.domain.algebra.matrix import ExactMatrix, Vector
from src.domain.exceptions import DimensionMismatch, EscapesBasis, ValidationError
from src.domain.geometry.operators import GeometryId, tau


def _index(basis: Sequence[Term]) -> Dict[TermKey, int]:
    index: Dict[TermKey, int] = {}
    for position, term in enumerate(basis):
        if term.key in index:
            raise ValidationError("basis terms must be pairwise distinct",
                                  field='basis', value=position)
        index[term.key] = position
    return index


def expression_to_vector(f: Expression, basis: Sequence[Term]) -> Vector:
    """Coordinates of ``f`` in the basis; EscapesBasis when f leaves the span."""
    index = _index(basis)
    vector: List[GaussianRational] = [ZERO] * len(basis)
    for key, coeff in f.items():
        position = index.get(key)
        if position is None:
            raise EscapesBasis("expression has a component outside the basis span",
                               term=str(Term.from_key(key, coeff)))
        vector[position] = coeff / basis[position].coeff
    return tuple(vector)


def vector_to_expression(vector: Sequence[Scalar], basis: Sequence[Term]) -> Expression:
    if len(vector) != len(basis):
        raise DimensionMismatch("vector length does not match basis size",
                                {'vector': len(vector), 'basis': len(basis)})
    return Expression(Term.from_key(term.key, term.coeff * GaussianRational.coerce(c))
                      for term, c in zip(basis, vector))


def matrix_of_tau(g: GeometryId, basis: Sequence[Term],
                  term_cap: int = DEFAULT_TERM_CAP) -> ExactMatrix:
    """M with tau(basis_j) = sum_i M[i, j] * basis_i."""
    _index(basis)
    columns = [expression_to_vector(tau(g, Expression([term]), term_cap), basis) for term in basis]
    return ExactMatrix.from_columns(columns, rows=len(basis))
