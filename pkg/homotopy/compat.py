"""
Exploratory residuals between the associative and Lie 2-structures on P ⊕ J.

No compatibility law between μ2 and l2, l3 is known for a general Poisson
dialgebra; this module evaluates a few Leibniz-type candidates on basis
tuples of P and reports what is left over, without asserting anything.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from algebra_core import PoissonDialgebra
from constructions import annihilator_J, require_poisson_dialgebra
from exact_linalg import Vector, basis_vector, format_rational, is_zero, linear_combination

from .associative_2 import mu2_value, mu3_value
from .lie_2 import l2_value, l3_value

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompatResidual:
    """
    One candidate law and its nonzero residuals.

    Attributes:
        name: Stable identifier
        formula: The expression whose vanishing is tested
        arity: Number of basis arguments
        evaluated: How many tuples were evaluated
        entries: (indices, residual) for every tuple with a nonzero residual
    """
    name: str
    formula: str
    arity: int
    evaluated: int
    entries: Tuple[Tuple[Tuple[int, ...], Vector], ...]

    @property
    def vanishes(self) -> bool:
        return not self.entries

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "formula": self.formula,
            "arity": self.arity,
            "evaluated": self.evaluated,
            "nonzero": len(self.entries),
            "entries": [{"indices": list(idx), "residual": [format_rational(v) for v in vec]}
                        for idx, vec in self.entries],
        }


@dataclass(frozen=True)
class CompatReport:
    """Residuals for all candidate laws on one Poisson dialgebra."""
    dim: int
    j_dim: int
    residuals: Tuple[CompatResidual, ...]

    def residual(self, name: str) -> CompatResidual:
        return next(r for r in self.residuals if r.name == name)

    def summary(self) -> str:
        parts = [f"{r.name}: {'vanishes' if r.vanishes else f'{len(r.entries)} nonzero'}" for r in self.residuals]
        return f"compatibility residuals on dim {self.dim}: " + ", ".join(parts)

    def to_dict(self) -> Dict[str, object]:
        return {"dim": self.dim, "j_dim": self.j_dim, "residuals": [r.to_dict() for r in self.residuals]}


def _scan(dim: int, arity: int, fn: Callable[..., Vector]) -> Tuple[int, List]:
    entries = []
    count = 0
    for idx in itertools.product(range(dim), repeat=arity):
        count += 1
        value = fn(*(basis_vector(dim, i) for i in idx))
        if not is_zero(value):
            entries.append((idx, value))
    return count, entries


def explore_compatibility(p: PoissonDialgebra, validate: bool = True) -> CompatReport:
    """
    Evaluate candidate compatibility residuals in ambient coordinates of P.

    Args:
        p: A Poisson dialgebra
        validate: Check the Poisson dialgebra axioms first

    Returns:
        CompatReport: One residual per candidate law
    """
    if validate:
        require_poisson_dialgebra(p)
    d, b, n = p.dialgebra, p.bracket, p.dim

    def m2(u, v):
        return mu2_value(d, u, v)

    def l2(u, v):
        return l2_value(b, u, v)

    def l3(u, v, w):
        return l3_value(b, u, v, w)

    def combo(*terms):
        return linear_combination(n, terms)

    candidates = [
        ("l2-derivation-of-mu2-right", "l2(x, μ2(y,z)) − μ2(l2(x,y), z) − μ2(y, l2(x,z))", 3,
         lambda x, y, z: combo((1, l2(x, m2(y, z))), (-1, m2(l2(x, y), z)), (-1, m2(y, l2(x, z))))),
        ("l2-derivation-of-mu2-left", "l2(μ2(x,y), z) − μ2(x, l2(y,z)) − μ2(l2(x,z), y)", 3,
         lambda x, y, z: combo((1, l2(m2(x, y), z)), (-1, m2(x, l2(y, z))), (-1, m2(l2(x, z), y)))),
        ("mu2-derivation-of-l2", "μ2(x, l2(y,z)) − l2(μ2(x,y), z) − l2(y, μ2(x,z))", 3,
         lambda x, y, z: combo((1, m2(x, l2(y, z))), (-1, l2(m2(x, y), z)), (-1, l2(y, m2(x, z))))),
        ("mu3-vs-l2", "μ3(x,y,z) − l2(x, l2(y,z))", 3,
         lambda x, y, z: combo((1, mu3_value(d, x, y, z)), (-1, l2(x, l2(y, z))))),
        ("l3-derivation-of-mu2", "l3(x,y, μ2(z,w)) − μ2(l3(x,y,z), w) − μ2(z, l3(x,y,w))", 4,
         lambda x, y, z, w: combo((1, l3(x, y, m2(z, w))), (-1, m2(l3(x, y, z), w)), (-1, m2(z, l3(x, y, w))))),
    ]

    residuals = []
    for name, formula, arity, fn in candidates:
        count, entries = _scan(n, arity, fn)
        residuals.append(CompatResidual(name, formula, arity, count, tuple(entries)))
        logger.debug(f"{name}: {len(entries)} of {count} tuples with nonzero residual")

    report = CompatReport(n, annihilator_J(p).dim, tuple(residuals))
    logger.info(report.summary())
    return report
