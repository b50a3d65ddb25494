"""
The associated graded of a filtered dialgebra.

Gr_0 = D_0 and Gr_i = D_i / D_{i−1}. Each Gr_i gets the basis of the
pivot-complement of D_{i−1} inside D_i, so lifts are deterministic.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from algebra_core import BilinearMap, GuardFailure, InvalidStructureError
from exact_linalg import Matrix, Subspace, Vector, quotient_data, sub

from .filtration import FilteredDialgebra, check_filtration
from .graded_structure import GradedAlgebraStructure, is_gr_commutative, koszul

logger = logging.getLogger(__name__)

Combiner = Callable[[int, int, Vector, Vector], Vector]


@dataclass(frozen=True)
class _Component:
    """Lift Gr_i → D ⊆ K^n and projection D_i → Gr_i, both in ambient coordinates."""
    dim: int
    lift: Matrix
    projection: Matrix

    def lifted_basis(self) -> List[Vector]:
        return [self.lift.column(s) for s in range(self.dim)]


def _components(fd: FilteredDialgebra) -> List[_Component]:
    n = fd.base.dim
    components = []
    for i, step in enumerate(fd.steps):
        below = fd.step(i - 1)
        # D_{i−1} in D_i coordinates
        kernel_space = Subspace.from_spanning(step.dim, [step.coordinates(v) for v in below.vectors()])
        q = quotient_data(step.dim, kernel_space)
        lift = step.inclusion().compose(q.section)
        coordinates = Matrix.from_entries(step.dim, n, [(r, p, 1) for r, p in enumerate(step.pivots)])
        components.append(_Component(q.quotient_dim, lift, q.projection.compose(coordinates)))
    return components


def _induce(fd: FilteredDialgebra, components: List[_Component], shift: int, combiner: Combiner,
            guard: str) -> Dict[Tuple[int, int], BilinearMap]:
    """
    Induce one graded tensor: (x̄_i, ȳ_j) ↦ class of combiner(i, j, x, y) in Gr_{i+j−shift}.

    Verifies that the value lies in D_{i+j−shift} and that perturbing either lift
    by an element of D_{i−1} (resp. D_{j−1}) changes it only by an element of
    D_{i+j−shift−1}.
    """
    table = {}
    top = fd.top
    for i, j in itertools.product(range(top + 1), repeat=2):
        target = i + j - shift
        if target < 0 or target > top:
            continue
        target_space, below_target = fd.step(target), fd.step(target - 1)
        xs, ys = components[i].lifted_basis(), components[j].lifted_basis()

        def value(s: int, t: int) -> Vector:
            v = combiner(i, j, xs[s], ys[t])
            if not target_space.contains(v):
                raise GuardFailure(guard, f"value for degrees ({i}, {j}) leaves D_{target}")
            return components[target].projection.apply(v)

        for u in fd.step(i - 1).vectors():
            for y in ys:
                if not below_target.contains(combiner(i, j, u, y)):
                    raise GuardFailure(guard + "-well-defined", f"left representative change at ({i}, {j})")
        for u in fd.step(j - 1).vectors():
            for x in xs:
                if not below_target.contains(combiner(i, j, x, u)):
                    raise GuardFailure(guard + "-well-defined", f"right representative change at ({i}, {j})")

        shape = (components[i].dim, components[j].dim, components[target].dim)
        table[(i, j)] = BilinearMap.from_function(shape, value)
    return table


def _product_tables(fd: FilteredDialgebra, components: List[_Component]):
    d = fd.base
    left = _induce(fd, components, 0, lambda i, j, x, y: d.left.evaluate(x, y), "graded-product")
    right = _induce(fd, components, 0, lambda i, j, x, y: d.right.evaluate(x, y), "graded-product")
    return left, right


def associated_graded(fd: FilteredDialgebra) -> GradedAlgebraStructure:
    """
    Gr(D) with induced products and the degree-0 bracket x⊣y − (−1)^{ij} y⊢x.

    Raises:
        InvalidStructureError: If fd fails check_filtration
        GuardFailure: "graded-product" or "graded-bracket" (or their
            "-well-defined" variants) if an induced value is not well defined
    """
    report = check_filtration(fd)
    if not report.passed:
        raise InvalidStructureError("filtration", report)
    d = fd.base
    components = _components(fd)
    left, right = _product_tables(fd, components)
    bracket = _induce(
        fd, components, 0,
        lambda i, j, x, y: sub(d.left.evaluate(x, y), tuple(koszul(i * j) * v for v in d.right.evaluate(y, x))),
        "graded-bracket",
    )
    g = GradedAlgebraStructure(
        tuple(c.dim for c in components), 0, left, right, bracket,
        tuple(c.lift for c in components), tuple(c.projection for c in components),
    )
    logger.debug(f"Associated graded with component dims {g.component_dims}")
    return g


def gerstenhaber_from_filtered(fd: FilteredDialgebra) -> GradedAlgebraStructure:
    """
    Gr(D) with the degree −1 bracket x⊣y − (−1)^{(i−1)(j−1)} y⊢x + D_{i+j−2}.

    Components whose target degree i+j−1 lies outside 0..N are zero.

    Raises:
        GuardFailure: "gr-commutative" if Gr(D) is not commutative;
            "gerstenhaber-bracket-degree" if a bracket value is not in D_{i+j−1}
    """
    graded = associated_graded(fd)
    if not is_gr_commutative(graded):
        raise GuardFailure("gr-commutative", "x̄⊣ȳ differs from ȳ⊢x̄ for some homogeneous pair")

    d = fd.base
    components = _components(fd)
    bracket = _induce(
        fd, components, 1,
        lambda i, j, x, y: sub(d.left.evaluate(x, y),
                               tuple(koszul((i - 1) * (j - 1)) * v for v in d.right.evaluate(y, x))),
        "gerstenhaber-bracket-degree",
    )
    logger.info(f"Gerstenhaber bracket on Gr with component dims {graded.component_dims}")
    return GradedAlgebraStructure(graded.component_dims, 1, graded.left, graded.right, bracket,
                                  graded.lifts, graded.projections)
