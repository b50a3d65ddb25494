"""
Homotopy structures over P ⊕ J for a Poisson dialgebra.

J = I ∩ Z absorbs the mixed placements of μ2 and l2 and every μ3 and l3
value. When ⊣ = ⊢ the pair assembles into a 2-term homotopy Poisson algebra
with the reduced product μ.
"""

import itertools
import logging
from typing import Tuple

from algebra_core import AxiomReport, GuardFailure, PoissonDialgebra, ReportBuilder
from constructions import annihilator_J, find_two_sided_unit, require_poisson_dialgebra
from graded import combine, koszul

from .associative_2 import check_associative_2_algebra, two_term_assoc_over
from .lie_2 import check_lie_2_algebra, two_term_lie_over
from .two_term import TwoTermAssoc, TwoTermHomotopyPoisson, TwoTermLie

logger = logging.getLogger(__name__)

HOMOTOPY_POISSON_AXIOMS = ("graded-associative", "l2-derivation", "l3-derivation")


def homotopy_pair_from_poisson_dialgebra(p: PoissonDialgebra,
                                         validate: bool = True) -> Tuple[TwoTermAssoc, TwoTermLie]:
    """
    The associative 2-algebra and the Lie 2-algebra on the same space P ⊕ J.

    Args:
        p: A Poisson dialgebra
        validate: Check the Poisson dialgebra axioms first

    Returns:
        Tuple[TwoTermAssoc, TwoTermLie]: Both with degree-1 part J

    Raises:
        InvalidStructureError: If validate is set and p is not a Poisson dialgebra
        GuardFailure: "j-membership" if a value that must lie in J does not;
            "homotopy-pair-identities" if either built structure fails its checker
    """
    if validate:
        require_poisson_dialgebra(p)
    j = annihilator_J(p)
    assoc = two_term_assoc_over(p.dialgebra, j, "j-membership")
    lie = two_term_lie_over(p.dim, p.bracket, j, "j-membership")
    for report in (check_associative_2_algebra(assoc), check_lie_2_algebra(lie)):
        if not report.passed:
            raise GuardFailure("homotopy-pair-identities", report.summary())
    logger.info(f"Homotopy pair on P ⊕ J with dims ({p.dim}, {j.dim})")
    return assoc, lie


def check_reduced(p: PoissonDialgebra) -> bool:
    """True iff x⊣y = x⊢y for all x, y."""
    return p.left == p.right


def homotopy_poisson_from_reduced(p: PoissonDialgebra, validate: bool = True) -> TwoTermHomotopyPoisson:
    """
    The 2-term homotopy Poisson algebra (P ⊕ J, μ, l1, l2, l3) of a reduced
    Poisson dialgebra.

    A two-sided unit for μ is allowed but logged, since the structure then
    collapses to an ordinary Poisson algebra.

    Raises:
        GuardFailure: "reduced" if ⊣ ≠ ⊢; "homotopy-poisson-derivation" if the
            assembled structure fails check_homotopy_poisson
    """
    if not check_reduced(p):
        raise GuardFailure("reduced", "left and right products differ")
    assoc, lie = homotopy_pair_from_poisson_dialgebra(p, validate)

    has_unit = find_two_sided_unit(p.dim, p.left) is not None
    if has_unit:
        logger.warning("Reduced product has a two-sided unit; the homotopy structure is an ordinary Poisson algebra")

    h = TwoTermHomotopyPoisson(lie, assoc.mu2_00, assoc.mu2_01, assoc.mu2_10, has_unit)
    report = check_homotopy_poisson(h)
    if not report.passed:
        raise GuardFailure("homotopy-poisson-derivation", report.summary())
    return h


def check_homotopy_poisson(h: TwoTermHomotopyPoisson) -> AxiomReport:
    """
    Check the Lie 2-algebra axioms and the Poisson-type laws of h.

    With ε = 2 − k + Σ|x_i| for l_k(x_1, …, x_{k−1}, −):

    - μ(μ(u,v),w) = μ(u,μ(v,w)) on homogeneous basis triples
    - l2(x, μ(u,v)) = μ(l2(x,u), v) + (−1)^{ε|u|} μ(u, l2(x,v)), ε = |x|
    - l3(x,y, μ(u,v)) = μ(l3(x,y,u), v) + (−1)^{ε|u|} μ(u, l3(x,y,v)), ε = |x|+|y|−1

    Terms landing in degree 2 or above vanish.
    """
    builder = ReportBuilder("homotopy_poisson", HOMOTOPY_POISSON_AXIOMS)
    builder.extend(check_lie_2_algebra(h.lie))
    m, k2, k3 = h.m, h.lie.k2, h.lie.k3
    elements = [(d, s, e) for d in (0, 1) for s, e in enumerate(h.space.basis(d))]

    def check(axiom, index, lhs, rhs):
        builder.compare(axiom, index, lhs.vec, rhs.vec)

    for (i, s, u), (j, t, v), (k, r, w) in itertools.product(elements, repeat=3):
        check("graded-associative", (i, j, k, s, t, r), m(m(u, v), w), m(u, m(v, w)))

    for (i, s, x), (j, t, u), (k, r, v) in itertools.product(elements, repeat=3):
        eps = i
        check("l2-derivation", (i, j, k, s, t, r), k2(x, m(u, v)),
              combine((1, m(k2(x, u), v)), (koszul(eps * j), m(u, k2(x, v)))))

    for (i, s, x), (j, t, y), (k, r, u), (q, o, v) in itertools.product(elements, repeat=4):
        eps = i + j - 1
        check("l3-derivation", (i, j, k, q, s, t, r, o), k3(x, y, m(u, v)),
              combine((1, m(k3(x, y, u), v)), (koszul(eps * k), m(u, k3(x, y, v)))))

    return builder.build()
