"""
Brackets induced by dialgebra products.

Any dialgebra carries the Leibniz bracket [x,y] = x⊣y − y⊢x, and together with
its two products this is a Poisson dialgebra.
"""

import logging

from algebra_core import (
    Dialgebra, InvalidStructureError, LeibnizAlgebra, PoissonDialgebra, check_dialgebra,
    check_poisson_dialgebra,
)

logger = logging.getLogger(__name__)


def require_dialgebra(d: Dialgebra) -> None:
    """Raise InvalidStructureError unless d passes check_dialgebra."""
    report = check_dialgebra(d)
    if not report.passed:
        raise InvalidStructureError("dialgebra", report)


def require_poisson_dialgebra(p: PoissonDialgebra) -> None:
    report = check_poisson_dialgebra(p)
    if not report.passed:
        raise InvalidStructureError("poisson_dialgebra", report)


def induced_leibniz(d: Dialgebra, validate: bool = True) -> LeibnizAlgebra:
    """
    The Leibniz bracket [x,y] = x⊣y − y⊢x of a dialgebra.

    Args:
        d: A valid dialgebra
        validate: Check the dialgebra axioms first

    Returns:
        LeibnizAlgebra: bracket constants left[i][j][k] − right[j][i][k]

    Raises:
        InvalidStructureError: If validate is set and d is not a dialgebra
    """
    if validate:
        require_dialgebra(d)
    return LeibnizAlgebra(d.dim, d.left.minus(d.right.swapped()))


def induced_poisson_dialgebra(d: Dialgebra, validate: bool = True) -> PoissonDialgebra:
    """The Poisson dialgebra (D, ⊣, ⊢, x⊣y − y⊢x)."""
    bracket = induced_leibniz(d, validate).bracket
    logger.debug(f"Induced bracket on dim {d.dim} has {len(bracket.entries())} nonzero constants")
    return PoissonDialgebra(d.dim, d.left, d.right, bracket)
