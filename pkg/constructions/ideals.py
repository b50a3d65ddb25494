"""
Distinguished subspaces: the bar ideal I, the right center Z and J = I ∩ Z.

Each is computed as the kernel of a stacked family of multiplication
operators; ideal properties are verified on the computed basis.
"""

import logging
from typing import List, Optional

from algebra_core import BilinearMap, Dialgebra, GuardFailure, LeibnizAlgebra, PoissonDialgebra
from exact_linalg import Matrix, Subspace, Vector, basis_vector, intersect, kernel, solve_particular

logger = logging.getLogger(__name__)


def _stacked_operator_rows(dim: int, columns_per_operator: List[List[Vector]]) -> Matrix:
    """Stack the matrices of several operators K^dim → K^dim given by their columns."""
    rows = []
    for columns in columns_per_operator:
        for k in range(dim):
            rows.append([columns[x][k] for x in range(dim)])
    return Matrix.from_rows(rows, cols=dim)


def ideal_I(d: Dialgebra) -> Subspace:
    """
    I = {x : x⊢y = 0 = y⊣x for all y}.

    Args:
        d: A valid dialgebra

    Returns:
        Subspace: I in canonical form

    Raises:
        GuardFailure: "ideal-I-closure" if I is not closed under both products
    """
    n = d.dim
    operators = []
    for y in range(n):
        operators.append([d.right.product(x, y) for x in range(n)])   # x ↦ x⊢y
        operators.append([d.left.product(y, x) for x in range(n)])    # x ↦ y⊣x
    ideal = kernel(_stacked_operator_rows(n, operators)) if n else Subspace.zero(0)

    for u in ideal.vectors():
        for j in range(n):
            e = basis_vector(n, j)
            for product in (d.left, d.right):
                for value in (product.evaluate(u, e), product.evaluate(e, u)):
                    if not ideal.contains(value):
                        raise GuardFailure("ideal-I-closure", f"product with basis {j} leaves I")

    logger.debug(f"Bar ideal I has dimension {ideal.dim} of {n}")
    return ideal


def right_center(l: LeibnizAlgebra) -> Subspace:
    """Z = {x : [y,x] = 0 for all y}."""
    n = l.dim
    operators = [[l.bracket.product(y, x) for x in range(n)] for y in range(n)]
    center = kernel(_stacked_operator_rows(n, operators)) if n else Subspace.zero(0)
    logger.debug(f"Right center has dimension {center.dim} of {n}")
    return center


def annihilator_J(p: PoissonDialgebra) -> Subspace:
    """J = I ∩ Z for a Poisson dialgebra."""
    return intersect(ideal_I(p.dialgebra), right_center(p.leibniz))


def center_of_product(dim: int, product: BilinearMap) -> Subspace:
    """{c : c·x = x·c for all x}."""
    operators = [[tuple(a - b for a, b in zip(product.product(c, x), product.product(x, c)))
                  for c in range(dim)] for x in range(dim)]
    return kernel(_stacked_operator_rows(dim, operators)) if dim else Subspace.zero(0)


def find_two_sided_unit(dim: int, product: BilinearMap) -> Optional[Vector]:
    """
    A vector e with e·x = x = x·e for every basis x, or None.

    Args:
        dim: Dimension
        product: The product

    Returns:
        Optional[Vector]: The unit if one exists
    """
    if dim == 0:
        return None
    rows, rhs = [], []
    for x in range(dim):
        for k in range(dim):
            rows.append([product.product(i, x)[k] for i in range(dim)])   # (e·x)_k
            rhs.append(1 if k == x else 0)
            rows.append([product.product(x, i)[k] for i in range(dim)])   # (x·e)_k
            rhs.append(1 if k == x else 0)
    try:
        unit = solve_particular(Matrix.from_rows(rows, cols=dim), rhs)
    except ValueError:
        return None
    return unit
