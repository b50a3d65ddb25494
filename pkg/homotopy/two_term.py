"""
Two-term graded structures V_0 ⊕ V_1.

Degree 0 is the large space (D or P) and degree 1 the ideal-like subspace
(I, Z or J) in its own coordinates. Structure maps are stored per degree
placement; placements that would land in degree 2 or above are zero and have
no tensor.
"""

from dataclasses import dataclass
from typing import List

from algebra_core import BilinearMap, ShapeMismatchError, TrilinearMap
from exact_linalg import Matrix, basis_vector
from graded import Homogeneous


def _require(name: str, shape, expected) -> None:
    if tuple(shape) != tuple(expected):
        raise ShapeMismatchError(f"{name} has shape {tuple(shape)}, expected {tuple(expected)}")


@dataclass(frozen=True)
class TwoTermSpace:
    """The graded space V_0 ⊕ V_1 with homogeneous basis helpers."""
    dim0: int
    dim1: int

    def dim(self, degree: int) -> int:
        return (self.dim0, self.dim1)[degree] if degree in (0, 1) else 0

    def basis(self, degree: int) -> List[Homogeneous]:
        return [Homogeneous(degree, basis_vector(self.dim(degree), s)) for s in range(self.dim(degree))]

    def all_basis(self) -> List[Homogeneous]:
        return self.basis(0) + self.basis(1)

    def zero(self, degree: int) -> Homogeneous:
        return Homogeneous(degree, (0,) * self.dim(degree))


@dataclass(frozen=True)
class TwoTermAssoc:
    """
    Associative 2-algebra data.

    Attributes:
        dim0, dim1: dim A_0, dim A_1
        mu1: dim0 × dim1 matrix of μ1: A_1 → A_0
        mu2_00: A_0 ⊗ A_0 → A_0
        mu2_01: A_0 ⊗ A_1 → A_1
        mu2_10: A_1 ⊗ A_0 → A_1
        mu3: A_0 ⊗ A_0 ⊗ A_0 → A_1
    """
    dim0: int
    dim1: int
    mu1: Matrix
    mu2_00: BilinearMap
    mu2_01: BilinearMap
    mu2_10: BilinearMap
    mu3: TrilinearMap

    def __post_init__(self):
        a, b = self.dim0, self.dim1
        _require("mu1", (self.mu1.rows, self.mu1.cols), (a, b))
        _require("mu2_00", self.mu2_00.shape, (a, a, a))
        _require("mu2_01", self.mu2_01.shape, (a, b, b))
        _require("mu2_10", self.mu2_10.shape, (b, a, b))
        _require("mu3", self.mu3.shape, (a, a, a, b))

    @property
    def space(self) -> TwoTermSpace:
        return TwoTermSpace(self.dim0, self.dim1)

    @classmethod
    def zero(cls, dim0: int, dim1: int) -> "TwoTermAssoc":
        return cls(dim0, dim1, Matrix.zeros(dim0, dim1), BilinearMap.zeros((dim0, dim0, dim0)),
                   BilinearMap.zeros((dim0, dim1, dim1)), BilinearMap.zeros((dim1, dim0, dim1)),
                   TrilinearMap.zeros((dim0, dim0, dim0, dim1)))

    def m1(self, a: Homogeneous) -> Homogeneous:
        if a.degree != 1:
            return self.space.zero(a.degree - 1)
        return Homogeneous(0, self.mu1.apply(a.vec))

    def m2(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        table = {(0, 0): self.mu2_00, (0, 1): self.mu2_01, (1, 0): self.mu2_10}
        return _evaluate2(self.space, table, x, y)

    def m3(self, x: Homogeneous, y: Homogeneous, z: Homogeneous) -> Homogeneous:
        if (x.degree, y.degree, z.degree) != (0, 0, 0):
            return self.space.zero(x.degree + y.degree + z.degree + 1)
        return Homogeneous(1, self.mu3.evaluate(x.vec, y.vec, z.vec))


@dataclass(frozen=True)
class TwoTermLie:
    """
    Lie 2-algebra data.

    l2 is stored on (0,0) and (0,1); the (1,0) placement is l2(a, x) = −l2(x, a).

    Attributes:
        dim0, dim1: dim g_0, dim g_1
        l1: dim0 × dim1 matrix
        l2_00: g_0 ⊗ g_0 → g_0
        l2_01: g_0 ⊗ g_1 → g_1
        l3: g_0 ⊗ g_0 ⊗ g_0 → g_1
    """
    dim0: int
    dim1: int
    l1: Matrix
    l2_00: BilinearMap
    l2_01: BilinearMap
    l3: TrilinearMap

    def __post_init__(self):
        a, b = self.dim0, self.dim1
        _require("l1", (self.l1.rows, self.l1.cols), (a, b))
        _require("l2_00", self.l2_00.shape, (a, a, a))
        _require("l2_01", self.l2_01.shape, (a, b, b))
        _require("l3", self.l3.shape, (a, a, a, b))

    @property
    def space(self) -> TwoTermSpace:
        return TwoTermSpace(self.dim0, self.dim1)

    @classmethod
    def zero(cls, dim0: int, dim1: int) -> "TwoTermLie":
        return cls(dim0, dim1, Matrix.zeros(dim0, dim1), BilinearMap.zeros((dim0, dim0, dim0)),
                   BilinearMap.zeros((dim0, dim1, dim1)), TrilinearMap.zeros((dim0, dim0, dim0, dim1)))

    def k1(self, a: Homogeneous) -> Homogeneous:
        if a.degree != 1:
            return self.space.zero(a.degree - 1)
        return Homogeneous(0, self.l1.apply(a.vec))

    def k2(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        if (x.degree, y.degree) == (1, 0):
            value = _evaluate2(self.space, {(0, 1): self.l2_01}, y, x)
            return Homogeneous(value.degree, tuple(-v for v in value.vec))
        return _evaluate2(self.space, {(0, 0): self.l2_00, (0, 1): self.l2_01}, x, y)

    def k3(self, x: Homogeneous, y: Homogeneous, z: Homogeneous) -> Homogeneous:
        if (x.degree, y.degree, z.degree) != (0, 0, 0):
            return self.space.zero(x.degree + y.degree + z.degree + 1)
        return Homogeneous(1, self.l3.evaluate(x.vec, y.vec, z.vec))


@dataclass(frozen=True)
class TwoTermHomotopyPoisson:
    """
    A Lie 2-algebra with a graded associative product μ of degree 0.

    Attributes:
        lie: The Lie 2-algebra
        mu_00, mu_01, mu_10: μ on the placements landing in degree 0 or 1
        has_unit: Whether μ on degree 0 has a two-sided unit
    """
    lie: TwoTermLie
    mu_00: BilinearMap
    mu_01: BilinearMap
    mu_10: BilinearMap
    has_unit: bool = False

    def __post_init__(self):
        a, b = self.lie.dim0, self.lie.dim1
        _require("mu_00", self.mu_00.shape, (a, a, a))
        _require("mu_01", self.mu_01.shape, (a, b, b))
        _require("mu_10", self.mu_10.shape, (b, a, b))

    @property
    def space(self) -> TwoTermSpace:
        return self.lie.space

    def m(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        table = {(0, 0): self.mu_00, (0, 1): self.mu_01, (1, 0): self.mu_10}
        return _evaluate2(self.space, table, x, y)


def _evaluate2(space: TwoTermSpace, table, x: Homogeneous, y: Homogeneous) -> Homogeneous:
    target = x.degree + y.degree
    m = table.get((x.degree, y.degree))
    if m is None or not x.vec or not y.vec:
        return space.zero(target)
    return Homogeneous(target, m.evaluate(x.vec, y.vec))
