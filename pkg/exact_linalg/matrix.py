"""
Dense rational matrices and exact row reduction.

Row reduction runs on sympy's DomainMatrix over QQ, which keeps every entry an
exact rational; results are handed back as Fractions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .rational import RationalLike, to_fraction
from .vectors import AmbientMismatchError, Vector, ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matrix:
    """Row-major rational matrix; rows × cols entries, immutable."""
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"Matrix shape must be non-negative, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Matrix {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    # --- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int = None) -> "Matrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows: Row lists of ints, Fractions or rational literals
            cols: Column count; required when rows is empty

        Returns:
            Matrix: The matrix
        """
        if cols is None:
            if not rows:
                raise ValueError("Column count required for a matrix without rows")
            cols = len(rows[0])
        flat: List[Fraction] = []
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError(f"Row {r} has {len(row)} entries, expected {cols}")
            flat.extend(to_fraction(v) for v in row)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[RationalLike]], rows: int) -> "Matrix":
        return cls.from_rows(list(zip(*columns)) if columns else [[] for _ in range(rows)],
                             cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(1) if r == c else ZERO for r in range(n) for c in range(n)))

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Iterable[Tuple[int, int, RationalLike]]) -> "Matrix":
        """Build from sparse (row, col, value) triples; unspecified entries are zero."""
        flat = [ZERO] * (rows * cols)
        for r, c, value in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"Entry ({r}, {c}) outside a {rows}x{cols} matrix")
            flat[r * cols + c] = to_fraction(value)
        return cls(rows, cols, tuple(flat))

    # --- access -------------------------------------------------------

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        start = r * self.cols
        return self.entries[start:start + self.cols]

    def column(self, c: int) -> Vector:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def row_vectors(self) -> List[Vector]:
        return [self.row(r) for r in range(self.rows)]

    def nonzero_entries(self) -> List[Tuple[int, int, Fraction]]:
        """Sparse (row, col, value) listing in row-major order."""
        return [
            (r, c, self.entries[r * self.cols + c])
            for r in range(self.rows) for c in range(self.cols)
            if self.entries[r * self.cols + c] != 0
        ]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # --- algebra ------------------------------------------------------

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product m·v."""
        if len(v) != self.cols:
            raise AmbientMismatchError(self.cols, len(v), "matrix argument")
        out = []
        for r in range(self.rows):
            start = r * self.cols
            acc = ZERO
            for c, a in enumerate(v):
                if a:
                    m = self.entries[start + c]
                    if m:
                        acc += m * a
            out.append(acc)
        return tuple(out)

    def compose(self, other: "Matrix") -> "Matrix":
        """Matrix product self·other (apply other first)."""
        if self.cols != other.rows:
            raise AmbientMismatchError(self.cols, other.rows, "matrix product")
        columns = [self.apply(other.column(c)) for c in range(other.cols)]
        return Matrix(self.rows, other.cols,
                      tuple(columns[c][r] for r in range(self.rows) for c in range(other.cols)))

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)))

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"Cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scaled(self, coefficient: RationalLike) -> "Matrix":
        c = to_fraction(coefficient)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def to_domain_matrix(self) -> DomainMatrix:
        rows = [[QQ(a.numerator, a.denominator) for a in self.row(r)] for r in range(self.rows)]
        return DomainMatrix(rows, (self.rows, self.cols), QQ)

    def as_dict(self) -> Dict[str, object]:
        return {"rows": self.rows, "cols": self.cols, "entries": self.nonzero_entries()}


def stack_rows(vectors: Sequence[Sequence[Fraction]], cols: int) -> Matrix:
    """Matrix whose rows are the given vectors (possibly none)."""
    return Matrix.from_rows([list(v) for v in vectors], cols=cols)


def _from_domain_matrix(dm: DomainMatrix, rows: int, cols: int) -> Matrix:
    sym = dm.to_Matrix()
    return Matrix(rows, cols, tuple(Fraction(int(sym[r, c].p), int(sym[r, c].q))
                                    for r in range(rows) for c in range(cols)))


def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form over the rationals.

    Args:
        m: Any matrix

    Returns:
        Tuple[Matrix, Tuple[int, ...]]: The unique RREF (same shape as m, zero rows
        at the bottom) and its pivot columns
    """
    if m.rows == 0 or m.cols == 0 or m.is_zero():
        return Matrix.zeros(m.rows, m.cols), ()

    reduced, pivots = m.to_domain_matrix().rref()
    return _from_domain_matrix(reduced, m.rows, m.cols), tuple(int(p) for p in pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve_particular(m: Matrix, rhs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """
    One solution x of m·x = rhs, free variables set to zero.

    Raises:
        ValueError: When the system is inconsistent
    """
    if len(rhs) != m.rows:
        raise AmbientMismatchError(m.rows, len(rhs), "right-hand side")
    augmented = Matrix.from_rows([list(m.row(r)) + [rhs[r]] for r in range(m.rows)], cols=m.cols + 1)
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        raise ValueError("Linear system is inconsistent")
    solution = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        solution[p] = reduced.entry(r, m.cols)
    return tuple(solution)
