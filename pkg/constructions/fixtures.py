"""
Named small algebras used as fixtures and as building blocks for generation.

Basis conventions are fixed here once:
- N2: basis (x, y), only x⊣x = y
- T3: basis (a, b, c), a·b = c
- truncated polynomial of degree k: basis (t, t², …, t^k), t^i·t^j = t^{i+j} or 0
- matrix algebras: basis E_ij in row-major order over the allowed (i, j)
"""

import itertools
from typing import List, Tuple

from algebra_core import (
    AssociativeAlgebra, BilinearMap, Dialgebra, LinearOperator, PoissonAlgebra,
)
from exact_linalg import Matrix, RationalLike, to_fraction


def n2_dialgebra() -> Dialgebra:
    left = BilinearMap.from_entries((2, 2, 2), [(0, 0, 1, 1)])
    return Dialgebra(2, left, BilinearMap.square_zeros(2))


def t3_algebra() -> AssociativeAlgebra:
    return AssociativeAlgebra(3, BilinearMap.from_entries((3, 3, 3), [(0, 1, 2, 1)]))


def t3_dialgebra() -> Dialgebra:
    return t3_algebra().as_dialgebra()


def zero_algebra(dim: int) -> AssociativeAlgebra:
    return AssociativeAlgebra.zero(dim)


def truncated_polynomial(degree: int) -> AssociativeAlgebra:
    """span{t, …, t^degree} with t^i·t^j = t^{i+j} (zero past the top degree)."""
    entries = [
        (i - 1, j - 1, i + j - 1, 1)
        for i in range(1, degree + 1) for j in range(1, degree + 1)
        if i + j <= degree
    ]
    return AssociativeAlgebra(degree, BilinearMap.from_entries((degree, degree, degree), entries))


def pointwise_algebra(dim: int) -> AssociativeAlgebra:
    """K^dim with coordinatewise multiplication (e_i·e_i = e_i)."""
    return AssociativeAlgebra(dim, BilinearMap.from_entries((dim, dim, dim), [(i, i, i, 1) for i in range(dim)]))


def matrix_units(n: int, strict: bool) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if (i < j if strict else i <= j)]


def _matrix_unit_algebra(units: List[Tuple[int, int]]) -> AssociativeAlgebra:
    position = {u: t for t, u in enumerate(units)}
    entries = []
    for (s, (i, j)), (t, (k, l)) in itertools.product(enumerate(units), repeat=2):
        if j == k and (i, l) in position:
            entries.append((s, t, position[(i, l)], 1))
    dim = len(units)
    return AssociativeAlgebra(dim, BilinearMap.from_entries((dim, dim, dim), entries))


def upper_triangular(n: int, strict: bool = True) -> AssociativeAlgebra:
    """(Strictly) upper-triangular n×n matrices; strict n = 3 is T3 up to basis order."""
    return _matrix_unit_algebra(matrix_units(n, strict))


def matrix_algebra(n: int) -> AssociativeAlgebra:
    return _matrix_unit_algebra([(i, j) for i in range(n) for j in range(n)])


def direct_sum(a: AssociativeAlgebra, b: AssociativeAlgebra) -> AssociativeAlgebra:
    return AssociativeAlgebra(a.dim + b.dim, block_sum(a.product, b.product))


def block_sum(m1: BilinearMap, m2: BilinearMap) -> BilinearMap:
    """Block-diagonal sum of two square structure tensors."""
    n1, n2 = m1.dim, m2.dim
    entries = [(i, j, k, v) for i, j, k, v in m1.entries()]
    entries += [(i + n1, j + n1, k + n1, v) for i, j, k, v in m2.entries()]
    n = n1 + n2
    return BilinearMap.from_entries((n, n, n), entries)


def commutator_bracket(product: BilinearMap, scale: RationalLike = 1) -> BilinearMap:
    """λ(xy − yx); with an associative product this always gives a Poisson algebra."""
    return product.minus(product.swapped()).scaled(to_fraction(scale))


def commutator_poisson(a: AssociativeAlgebra, scale: RationalLike = 1) -> PoissonAlgebra:
    return PoissonAlgebra(a.dim, a.product, commutator_bracket(a.product, scale))


def nonabelian_lie_2() -> PoissonAlgebra:
    """Zero product with the 2-dim Lie bracket [x,y] = y."""
    bracket = BilinearMap.from_entries((2, 2, 2), [(0, 1, 1, 1), (1, 0, 1, -1)])
    return PoissonAlgebra(2, BilinearMap.square_zeros(2), bracket)


def heisenberg_lie() -> PoissonAlgebra:
    """Zero product with [x,y] = z."""
    bracket = BilinearMap.from_entries((3, 3, 3), [(0, 1, 2, 1), (1, 0, 2, -1)])
    return PoissonAlgebra(3, BilinearMap.square_zeros(3), bracket)


def sl2_lie() -> PoissonAlgebra:
    """Zero product with sl2 in the basis (h, e, f)."""
    bracket = BilinearMap.from_entries((3, 3, 3), [
        (0, 1, 1, 2), (1, 0, 1, -2),
        (0, 2, 2, -2), (2, 0, 2, 2),
        (1, 2, 0, 1), (2, 1, 0, -1),
    ])
    return PoissonAlgebra(3, BilinearMap.square_zeros(3), bracket)


def poisson_direct_sum(p: PoissonAlgebra, q: PoissonAlgebra) -> PoissonAlgebra:
    return PoissonAlgebra(p.dim + q.dim, block_sum(p.product, q.product), block_sum(p.bracket, q.bracket))


def k2_pointwise_poisson() -> PoissonAlgebra:
    """K² with pointwise product and zero bracket."""
    return PoissonAlgebra(2, pointwise_algebra(2).product, BilinearMap.square_zeros(2))


def first_coordinate_projection() -> LinearOperator:
    return LinearOperator(2, Matrix.from_rows([[1, 0], [0, 0]]))


def truncated_derivation() -> LinearOperator:
    """d(t) = t², d(t²) = 0 on span{t, t²}."""
    return LinearOperator(2, Matrix.from_rows([[0, 0], [1, 0]]))


def scalar_operator(dim: int, value: RationalLike) -> LinearOperator:
    return LinearOperator(dim, Matrix.identity(dim).scaled(value))
