"""
Exact dense linear algebra over the Gaussian rationals.
"""

from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Sequence, Tuple

from src.domain.algebra.gaussian import GaussianRational, Scalar, ZERO, ONE
from src.domain.exceptions import DimensionMismatch

Vector = Tuple[GaussianRational, ...]


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major matrix of Gaussian rationals."""

    rows: int
    cols: int
    entries: Tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be non-negative",
                                    {'rows': self.rows, 'cols': self.cols})
        entries = tuple(GaussianRational.coerce(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch("entry count does not match shape",
                                    {'rows': self.rows, 'cols': self.cols, 'entries': len(entries)})
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'ExactMatrix':
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> 'ExactMatrix':
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> 'ExactMatrix':
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise DimensionMismatch("ragged rows")
        return cls(n_rows, n_cols, tuple(e for row in rows for e in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: Optional[int] = None) -> 'ExactMatrix':
        n_rows = len(columns[0]) if columns else (rows or 0)
        if any(len(col) != n_rows for col in columns):
            raise DimensionMismatch("ragged columns")
        return cls(n_rows, len(columns),
                   tuple(columns[j][i] for i in range(n_rows) for j in range(len(columns))))

    def __getitem__(self, index: Tuple[int, int]) -> GaussianRational:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ",
                                    {'left': (self.rows, self.cols), 'right': (other.rows, other.cols)})
        columns = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for col in columns:
                total = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        total = total + a * b
                entries.append(total)
        return ExactMatrix(self.rows, other.cols, tuple(entries))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch("vector length does not match column count",
                                    {'cols': self.cols, 'length': len(vector)})
        vector = [GaussianRational.coerce(x) for x in vector]
        result = []
        for i in range(self.rows):
            total = ZERO
            for a, b in zip(self.row(i), vector):
                if a and b:
                    total = total + a * b
            result.append(total)
        return tuple(result)


def mat_pow(m: ExactMatrix, r: int) -> ExactMatrix:
    """Exact M^r by repeated squaring; M^0 is the identity."""
    if not m.is_square:
        raise DimensionMismatch("matrix power needs a square matrix", {'rows': m.rows, 'cols': m.cols})
    if r < 0:
        raise DimensionMismatch("negative matrix power", {'r': r})
    result = ExactMatrix.identity(m.rows)
    base = m
    while r:
        if r & 1:
            result = result @ base
        r >>= 1
        if r:
            base = base @ base
    return result


def _clear_denominators(row: List[GaussianRational]) -> List[GaussianRational]:
    scale = 1
    for entry in row:
        scale = lcm(scale, entry.re_den, entry.im_den)
    return [entry * scale for entry in row] if scale != 1 else row


def _echelon(m: ExactMatrix) -> Tuple[List[List[GaussianRational]], List[int]]:
    """
    Fraction-free (Bareiss) forward elimination.

    Rows are first scaled to Gaussian integers. Each step replaces a row by
    ``(pivot * row - factor * pivot_row) / previous_pivot``; the pivot row is
    the first row, in index order, with a nonzero entry in the column.
    """
    rows = [_clear_denominators(list(m.row(i))) for i in range(m.rows)]
    pivots: List[int] = []
    previous = ONE
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if rows[i][col]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][col]
        for i in range(r + 1, m.rows):
            factor = rows[i][col]
            target = rows[i]
            updated = target[:col]
            for j in range(col, m.cols):
                value = pivot * target[j]
                if factor and rows[r][j]:
                    value = value - factor * rows[r][j]
                updated.append(value / previous if value and previous != ONE else value)
            rows[i] = updated
        previous = pivot
        pivots.append(col)
        r += 1
    return rows, pivots


def row_reduce(m: ExactMatrix) -> Tuple[List[List[GaussianRational]], List[int]]:
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _echelon(m)
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        pivot = rows[k][col]
        rows[k] = [entry / pivot if entry else entry for entry in rows[k]]
        for i in range(k):
            factor = rows[i][col]
            if factor:
                rows[i] = [a - factor * b if b else a for a, b in zip(rows[i], rows[k])]
    return rows[:len(pivots)], pivots


def rank(m: ExactMatrix) -> int:
    return len(_echelon(m)[1])


def nullspace(m: ExactMatrix) -> List[Vector]:
    """Kernel basis in reduced echelon form: one vector per free column, in column order."""
    reduced, pivots = row_reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * m.cols
        vector[free] = ONE
        for k, col in enumerate(pivots):
            vector[col] = -reduced[k][free]
        basis.append(tuple(vector))
    return basis


def solve_in_span(columns: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> Optional[Vector]:
    """
    Coefficients c with sum_j c_j * columns[j] == target, or None.

    Free coordinates are pinned to zero.
    """
    n_rows = len(target)
    augmented = ExactMatrix.from_columns(list(columns) + [list(target)], rows=n_rows)
    for vector in nullspace(augmented):
        last = vector[-1]
        if last:
            return tuple(-x / last for x in vector[:-1])
    return None
