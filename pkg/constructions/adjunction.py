"""
Instance-level checks of the two adjunctions.

Given a homomorphism φ′ from a (Poisson) dialgebra into the structure induced
on an algebra object f: M → A, the composite g = f∘φ′ factors uniquely through
the quotient projection p as g = φ∘p. These functions compute φ and report the
kernel condition, the factorization, the homomorphism property and uniqueness.
"""

import logging
from typing import Tuple

from algebra_core import (
    AxiomReport, Dialgebra, InvalidStructureError, PoissonDialgebra, ReportBuilder, StructureKind,
    check_homomorphism,
)
from exact_linalg import Matrix, QuotientData, basis_vector, zero_vector

from .lm_objects import (
    LMObject, PoissonLMObject, dialgebra_from_lm_object, poisson_dialgebra_from_bimodule_map,
)
from .quotients import associativization, poissonization

logger = logging.getLogger(__name__)

FACTORIZATION_AXIOMS = ("kernel-condition", "factorization", "uniqueness")


def factor_through_quotient(q: QuotientData, g: Matrix,
                            kind: str = "quotient_factorization") -> Tuple[Matrix, AxiomReport]:
    """
    Solve φ∘p = g for φ, with p the projection of q.

    - kernel-condition: g kills every kernel basis vector, indexed (vector,)
    - factorization: (φ∘p) e_j = g e_j, indexed (j,)
    - uniqueness: p∘s e_j = e_j for the section s, indexed (j,); then ψ∘p = 0
      forces ψ = ψ∘p∘s = 0, so φ is the only solution

    Args:
        q: Quotient data with projection p and section s
        g: Matrix with q.ambient_dim columns
        kind: Report kind

    Returns:
        Tuple[Matrix, AxiomReport]: φ = g∘s and the report
    """
    builder = ReportBuilder(kind, FACTORIZATION_AXIOMS)
    for index, k in enumerate(q.kernel.vectors()):
        builder.compare("kernel-condition", (index,), g.apply(k), zero_vector(g.rows))

    phi = g.compose(q.section)
    through = phi.compose(q.projection)
    for j in range(g.cols):
        builder.compare("factorization", (j,), through.column(j), g.column(j))

    retraction = q.projection.compose(q.section)
    for j in range(q.quotient_dim):
        builder.compare("uniqueness", (j,), retraction.column(j), basis_vector(q.quotient_dim, j))
    return phi, builder.build()


def check_adjoint_factorization(d: Dialgebra, o: LMObject, phi_prime: Matrix) -> Tuple[Matrix, AxiomReport]:
    """
    Factor f∘φ′ through the associativization of d.

    Args:
        d: A valid dialgebra
        o: A valid associative algebra object
        phi_prime: M-dim × d-dim matrix of a dialgebra homomorphism into the
            dialgebra induced on M

    Returns:
        Tuple[Matrix, AxiomReport]: φ: D_As → A and the report with axioms
        kernel-condition, factorization, uniqueness and the homomorphism axioms

    Raises:
        InvalidStructureError: If φ′ is not a dialgebra homomorphism
    """
    induced = dialgebra_from_lm_object(o)
    precondition = check_homomorphism(phi_prime, d, induced, StructureKind.DIALGEBRA)
    if not precondition.passed:
        raise InvalidStructureError("dialgebra-homomorphism", precondition)

    algebra, q = associativization(d)
    phi, factorization = factor_through_quotient(q, o.f.compose(phi_prime))
    builder = ReportBuilder("adjoint_factorization")
    builder.extend(factorization)
    builder.extend(check_homomorphism(phi, algebra, o.downstairs, StructureKind.ASSOCIATIVE))

    report = builder.build()
    logger.debug(f"Adjoint factorization: {report.summary()}")
    return phi, report


def check_poisson_adjoint_factorization(p: PoissonDialgebra, o: PoissonLMObject,
                                        phi_prime: Matrix) -> Tuple[Matrix, AxiomReport]:
    """
    Factor f∘φ′ through the Poissonization of p.

    Same contract as check_adjoint_factorization, with Poisson dialgebra
    homomorphisms upstairs and Poisson algebra homomorphisms downstairs.
    """
    induced = poisson_dialgebra_from_bimodule_map(o)
    precondition = check_homomorphism(phi_prime, p, induced, StructureKind.POISSON_DIALGEBRA)
    if not precondition.passed:
        raise InvalidStructureError("poisson-dialgebra-homomorphism", precondition)

    algebra, q = poissonization(p)
    phi, factorization = factor_through_quotient(q, o.f.compose(phi_prime))
    builder = ReportBuilder("poisson_adjoint_factorization")
    builder.extend(factorization)
    builder.extend(check_homomorphism(phi, algebra, o.downstairs, StructureKind.POISSON))
    return phi, builder.build()
