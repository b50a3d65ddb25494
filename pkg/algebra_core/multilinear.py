"""
Structure-constant tensors.

BilinearMap houses any product or bracket: e_i ∘ e_j = Σ_k c[i][j][k] e_k.
Shapes may be rectangular (d_left, d_right, d_out) so the same type also
carries module actions and graded components.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple

from exact_linalg import Matrix, Vector, RationalLike, to_fraction
from exact_linalg.vectors import ZERO

from .errors import ShapeMismatchError

logger = logging.getLogger(__name__)

Shape3 = Tuple[int, int, int]
Shape4 = Tuple[int, int, int, int]


def _accumulate(acc: List[Fraction], coefficient: Fraction, values: Vector) -> None:
    for k, value in enumerate(values):
        if value:
            acc[k] += coefficient * value


@dataclass(frozen=True)
class BilinearMap:
    """
    Bilinear map K^a × K^b → K^c given by structure constants.

    Attributes:
        shape: (a, b, c)
        table: table[i][j] is the output vector for (e_i, e_j)
    """
    shape: Shape3
    table: Tuple[Tuple[Vector, ...], ...]

    def __post_init__(self):
        a, b, c = self.shape
        if len(self.table) != a or any(len(row) != b for row in self.table):
            raise ShapeMismatchError(f"Bilinear table does not match shape {self.shape}")
        if any(len(v) != c for row in self.table for v in row):
            raise ShapeMismatchError(f"Bilinear outputs must have length {c}")

    # --- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "BilinearMap":
        a, b, c = shape
        zero = (ZERO,) * c
        return cls((a, b, c), tuple(tuple(zero for _ in range(b)) for _ in range(a)))

    @classmethod
    def square_zeros(cls, dim: int) -> "BilinearMap":
        return cls.zeros((dim, dim, dim))

    @classmethod
    def from_entries(cls, shape: Sequence[int],
                     entries: Iterable[Tuple[int, int, int, RationalLike]]) -> "BilinearMap":
        """
        Build from sparse (i, j, k, value) entries; unspecified entries are zero.

        Raises:
            ShapeMismatchError: On an out-of-range index
        """
        a, b, c = shape
        dense = [[[ZERO] * c for _ in range(b)] for _ in range(a)]
        for i, j, k, value in entries:
            if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
                raise ShapeMismatchError(f"Entry ({i}, {j}, {k}) outside shape {tuple(shape)}")
            dense[i][j][k] = to_fraction(value)
        return cls((a, b, c), tuple(tuple(tuple(v) for v in row) for row in dense))

    @classmethod
    def from_function(cls, shape: Sequence[int], fn: Callable[[int, int], Sequence[Fraction]]) -> "BilinearMap":
        """Build from a function returning the output vector for each basis pair."""
        a, b, c = shape
        table = []
        for i in range(a):
            row = []
            for j in range(b):
                value = tuple(fn(i, j))
                if len(value) != c:
                    raise ShapeMismatchError(f"Output for ({i}, {j}) has length {len(value)}, expected {c}")
                row.append(value)
            table.append(tuple(row))
        return cls((a, b, c), tuple(table))

    # --- access -------------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension of a square map; raises for rectangular shapes."""
        a, b, c = self.shape
        if not a == b == c:
            raise ShapeMismatchError(f"Map of shape {self.shape} is not square")
        return a

    def product(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        return self.table[i][j][k]

    def entries(self) -> List[Tuple[int, int, int, Fraction]]:
        """Nonzero (i, j, k, value) entries in lexicographic order."""
        return [
            (i, j, k, value)
            for i, row in enumerate(self.table)
            for j, out in enumerate(row)
            for k, value in enumerate(out)
            if value != 0
        ]

    def is_zero(self) -> bool:
        return all(value == 0 for row in self.table for out in row for value in out)

    # --- evaluation ---------------------------------------------------

    def evaluate(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        a, b, c = self.shape
        if len(u) != a or len(v) != b:
            raise ShapeMismatchError(
                f"Arguments of lengths ({len(u)}, {len(v)}) do not fit shape {self.shape}"
            )
        acc = [ZERO] * c
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.table[i]
            for j, vj in enumerate(v):
                if vj:
                    _accumulate(acc, ui * vj, row[j])
        return tuple(acc)

    # --- derived maps -------------------------------------------------

    def swapped(self) -> "BilinearMap":
        """The map (u, v) ↦ self(v, u)."""
        a, b, c = self.shape
        return BilinearMap((b, a, c), tuple(tuple(self.table[i][j] for i in range(a)) for j in range(b)))

    def scaled(self, coefficient: RationalLike) -> "BilinearMap":
        s = to_fraction(coefficient)
        return BilinearMap(self.shape, tuple(
            tuple(tuple(s * value for value in out) for out in row) for row in self.table
        ))

    def plus(self, other: "BilinearMap") -> "BilinearMap":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Cannot add maps of shapes {self.shape} and {other.shape}")
        return BilinearMap(self.shape, tuple(
            tuple(tuple(x + y for x, y in zip(o1, o2)) for o1, o2 in zip(r1, r2))
            for r1, r2 in zip(self.table, other.table)
        ))

    def minus(self, other: "BilinearMap") -> "BilinearMap":
        return self.plus(other.scaled(-1))

    def transformed(self, left: Matrix, right: Matrix, out: Matrix) -> "BilinearMap":
        """
        Change coordinates: (ū, v̄) ↦ out · self(left·ū, right·v̄).

        Used for restrictions to subspaces and products on quotients.
        """
        a, b, c = self.shape
        if left.rows != a or right.rows != b or out.cols != c:
            raise ShapeMismatchError("Coordinate change matrices do not fit the map")
        lefts = [left.column(t) for t in range(left.cols)]
        rights = [right.column(t) for t in range(right.cols)]
        return BilinearMap.from_function(
            (left.cols, right.cols, out.rows),
            lambda s, t: out.apply(self.evaluate(lefts[s], rights[t])),
        )


@dataclass(frozen=True)
class TrilinearMap:
    """Trilinear map K^a × K^b × K^c → K^d; table[i][j][k] is the output vector."""
    shape: Shape4
    table: Tuple[Tuple[Tuple[Vector, ...], ...], ...]

    def __post_init__(self):
        a, b, c, d = self.shape
        if len(self.table) != a or any(len(plane) != b for plane in self.table):
            raise ShapeMismatchError(f"Trilinear table does not match shape {self.shape}")
        if any(len(row) != c or any(len(v) != d for v in row) for plane in self.table for row in plane):
            raise ShapeMismatchError(f"Trilinear table does not match shape {self.shape}")

    @classmethod
    def zeros(cls, shape: Sequence[int]) -> "TrilinearMap":
        a, b, c, d = shape
        zero = (ZERO,) * d
        return cls((a, b, c, d), tuple(tuple(tuple(zero for _ in range(c)) for _ in range(b)) for _ in range(a)))

    @classmethod
    def from_entries(cls, shape: Sequence[int],
                     entries: Iterable[Tuple[int, int, int, int, RationalLike]]) -> "TrilinearMap":
        a, b, c, d = shape
        dense = [[[[ZERO] * d for _ in range(c)] for _ in range(b)] for _ in range(a)]
        for i, j, k, l, value in entries:
            if not (0 <= i < a and 0 <= j < b and 0 <= k < c and 0 <= l < d):
                raise ShapeMismatchError(f"Entry ({i}, {j}, {k}, {l}) outside shape {tuple(shape)}")
            dense[i][j][k][l] = to_fraction(value)
        return cls((a, b, c, d), tuple(tuple(tuple(tuple(v) for v in row) for row in plane) for plane in dense))

    @classmethod
    def from_function(cls, shape: Sequence[int],
                      fn: Callable[[int, int, int], Sequence[Fraction]]) -> "TrilinearMap":
        a, b, c, d = shape
        table = []
        for i in range(a):
            plane = []
            for j in range(b):
                row = []
                for k in range(c):
                    value = tuple(fn(i, j, k))
                    if len(value) != d:
                        raise ShapeMismatchError(f"Output for ({i}, {j}, {k}) has length {len(value)}, expected {d}")
                    row.append(value)
                plane.append(tuple(row))
            table.append(tuple(plane))
        return cls((a, b, c, d), tuple(table))

    def value(self, i: int, j: int, k: int) -> Vector:
        return self.table[i][j][k]

    def entries(self) -> List[Tuple[int, int, int, int, Fraction]]:
        return [
            (i, j, k, l, value)
            for i, plane in enumerate(self.table)
            for j, row in enumerate(plane)
            for k, out in enumerate(row)
            for l, value in enumerate(out)
            if value != 0
        ]

    def is_zero(self) -> bool:
        return not self.entries()

    def evaluate(self, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
        a, b, c, d = self.shape
        if (len(u), len(v), len(w)) != (a, b, c):
            raise ShapeMismatchError(f"Arguments do not fit trilinear shape {self.shape}")
        acc = [ZERO] * d
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                uv = ui * vj
                row = self.table[i][j]
                for k, wk in enumerate(w):
                    if wk:
                        _accumulate(acc, uv * wk, row[k])
        return tuple(acc)

    def plus(self, other: "TrilinearMap") -> "TrilinearMap":
        if self.shape != other.shape:
            raise ShapeMismatchError(f"Cannot add maps of shapes {self.shape} and {other.shape}")
        return TrilinearMap.from_function(
            self.shape,
            lambda i, j, k: tuple(x + y for x, y in zip(self.table[i][j][k], other.table[i][j][k])),
        )


@dataclass(frozen=True)
class LinearOperator:
    """Square linear map on K^dim (differentials d, averaging operators α)."""
    dim: int
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.dim or self.matrix.cols != self.dim:
            raise ShapeMismatchError(
                f"Operator on K^{self.dim} needs a {self.dim}x{self.dim} matrix, "
                f"got {self.matrix.rows}x{self.matrix.cols}"
            )

    @classmethod
    def from_matrix(cls, matrix: Matrix) -> "LinearOperator":
        return cls(matrix.rows, matrix)

    @classmethod
    def identity(cls, dim: int) -> "LinearOperator":
        return cls(dim, Matrix.identity(dim))

    @classmethod
    def zero(cls, dim: int) -> "LinearOperator":
        return cls(dim, Matrix.zeros(dim, dim))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.dim, self.matrix.compose(other.matrix))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def evaluate(b: BilinearMap, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    """Bilinear extension of the structure constants of b to (u, v)."""
    return b.evaluate(u, v)
