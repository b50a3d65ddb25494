"""
Quotient functors: associativization and Poissonization.

Both quotients are taken by a subspace that the theory proves to be an ideal;
the ideal property is verified every time before structure constants are
induced on the quotient.
"""

import itertools
import logging
from typing import Iterable, List, Tuple

from algebra_core import (
    AssociativeAlgebra, BilinearMap, Dialgebra, GuardFailure, PoissonAlgebra, PoissonDialgebra,
    check_associative, check_poisson_algebra,
)
from exact_linalg import QuotientData, Subspace, Vector, basis_vector, quotient_data, sub, add

from .induced import require_dialgebra, require_poisson_dialgebra

logger = logging.getLogger(__name__)


def _verify_stable(guard: str, space: Subspace, maps: Iterable[Tuple[str, BilinearMap]]) -> None:
    """Raise GuardFailure unless space ∘ D and D ∘ space lie in space for each map."""
    n = space.ambient_dim
    basis = [basis_vector(n, j) for j in range(n)]
    for name, m in maps:
        for u, e in itertools.product(space.vectors(), basis):
            if not space.contains(m.evaluate(u, e)) or not space.contains(m.evaluate(e, u)):
                raise GuardFailure(guard, f"{name} of a kernel vector with a basis vector leaves the kernel")


def bar_differences(d: Dialgebra) -> List[Vector]:
    """e_i⊣e_j − e_i⊢e_j for all basis pairs."""
    return [sub(d.left.product(i, j), d.right.product(i, j))
            for i, j in itertools.product(range(d.dim), repeat=2)]


def associativization(d: Dialgebra, validate: bool = True) -> Tuple[AssociativeAlgebra, QuotientData]:
    """
    The associative quotient D_As = D / span{x⊣y − x⊢y}.

    Args:
        d: A valid dialgebra
        validate: Check the dialgebra axioms first

    Returns:
        Tuple[AssociativeAlgebra, QuotientData]: The quotient algebra with product
        p(s(ū)⊣s(v̄)) and the projection/section data

    Raises:
        GuardFailure: "associativization-ideal" if the kernel is not a two-sided
            ideal for both products
    """
    if validate:
        require_dialgebra(d)

    kernel_space = Subspace.from_spanning(d.dim, bar_differences(d))
    _verify_stable("associativization-ideal", kernel_space, [("left", d.left), ("right", d.right)])

    q = quotient_data(d.dim, kernel_space)
    product = d.left.transformed(q.section, q.section, q.projection)
    algebra = AssociativeAlgebra(q.quotient_dim, product)

    if not check_associative(algebra.dim, algebra.product).passed:
        raise GuardFailure("associativization-associative", "quotient product is not associative")

    logger.info(f"Associativization: quotient dim {q.quotient_dim} of {d.dim}")
    return algebra, q


def poissonization(p: PoissonDialgebra, validate: bool = True) -> Tuple[PoissonAlgebra, QuotientData]:
    """
    The Poisson algebra quotient of a Poisson dialgebra.

    The kernel is spanned by x⊣y − x⊢y and by the symmetric part [x,y] + [y,x]
    of the bracket.

    Args:
        p: A valid Poisson dialgebra
        validate: Check the Poisson dialgebra axioms first

    Returns:
        Tuple[PoissonAlgebra, QuotientData]: Quotient Poisson algebra and projection data

    Raises:
        GuardFailure: "poissonization-stability" if the kernel is not stable under
            the products and the bracket; "poissonization-poisson" if the quotient
            fails the Poisson algebra check
    """
    if validate:
        require_poisson_dialgebra(p)

    symmetric = [add(p.bracket.product(i, j), p.bracket.product(j, i))
                 for i, j in itertools.product(range(p.dim), repeat=2)]
    kernel_space = Subspace.from_spanning(p.dim, bar_differences(p.dialgebra) + symmetric)
    _verify_stable("poissonization-stability", kernel_space,
                   [("left", p.left), ("right", p.right), ("bracket", p.bracket)])

    q = quotient_data(p.dim, kernel_space)
    product = p.left.transformed(q.section, q.section, q.projection)
    bracket = p.bracket.transformed(q.section, q.section, q.projection)
    algebra = PoissonAlgebra(q.quotient_dim, product, bracket)

    report = check_poisson_algebra(algebra.dim, algebra.product, algebra.bracket)
    if not report.passed:
        raise GuardFailure("poissonization-poisson", report.summary())

    logger.info(f"Poissonization: quotient dim {q.quotient_dim} of {p.dim}")
    return algebra, q
