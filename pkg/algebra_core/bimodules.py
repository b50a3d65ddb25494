"""
Bimodules over dialgebras, Poisson dialgebras, associative and Poisson algebras.

A bimodule is stored as its action tensors. Checks evaluate the algebra's
identities in every placement with exactly one entry in the module M.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from exact_linalg import Vector

from .errors import ShapeMismatchError
from .identities import (
    ALGEBRA, ASSOCIATIVE_IDENTITY, COMPATIBILITY_IDENTITIES, DIALGEBRA_IDENTITIES,
    LEIBNIZ_IDENTITY, LEIBNIZ_RULE_IDENTITY, LIE_MODULE_IDENTITY, MIXED_SKEW_IDENTITIES, MODULE,
    Operations, check_identities, single_module_placements,
)
from .multilinear import BilinearMap
from .reports import AxiomReport, ReportBuilder
from .structures import AssociativeAlgebra, Dialgebra, PoissonAlgebra, PoissonDialgebra

logger = logging.getLogger(__name__)

SINGLE_MODULE = {2: single_module_placements(2), 3: single_module_placements(3)}


def _require(name: str, b: BilinearMap, shape: Tuple[int, int, int]) -> None:
    if b.shape != shape:
        raise ShapeMismatchError(f"Action {name} has shape {b.shape}, expected {shape}")


@dataclass(frozen=True)
class DialgebraBimodule:
    """
    Actions of a dialgebra D on a module M.

    left_dm: x⊣m, left_md: m⊣x, right_dm: x⊢m, right_md: m⊢x.
    """
    m_dim: int
    left_dm: BilinearMap
    left_md: BilinearMap
    right_dm: BilinearMap
    right_md: BilinearMap

    def validate_shapes(self, d_dim: int) -> None:
        _require("left_dm", self.left_dm, (d_dim, self.m_dim, self.m_dim))
        _require("left_md", self.left_md, (self.m_dim, d_dim, self.m_dim))
        _require("right_dm", self.right_dm, (d_dim, self.m_dim, self.m_dim))
        _require("right_md", self.right_md, (self.m_dim, d_dim, self.m_dim))

    @classmethod
    def zero(cls, d_dim: int, m_dim: int) -> "DialgebraBimodule":
        dm = BilinearMap.zeros((d_dim, m_dim, m_dim))
        md = BilinearMap.zeros((m_dim, d_dim, m_dim))
        return cls(m_dim, dm, md, dm, md)


@dataclass(frozen=True)
class PoissonDialgebraBimodule:
    """Dialgebra bimodule plus bracket actions [x,m] (bracket_dm) and [m,x] (bracket_md)."""
    dialgebra_part: DialgebraBimodule
    bracket_dm: BilinearMap
    bracket_md: BilinearMap

    @property
    def m_dim(self) -> int:
        return self.dialgebra_part.m_dim

    def validate_shapes(self, d_dim: int) -> None:
        self.dialgebra_part.validate_shapes(d_dim)
        _require("bracket_dm", self.bracket_dm, (d_dim, self.m_dim, self.m_dim))
        _require("bracket_md", self.bracket_md, (self.m_dim, d_dim, self.m_dim))


@dataclass(frozen=True)
class AssociativeBimodule:
    """Left action a·m (A⊗M→M) and right action m·a (M⊗A→M)."""
    m_dim: int
    left_action: BilinearMap
    right_action: BilinearMap

    def validate_shapes(self, a_dim: int) -> None:
        _require("left_action", self.left_action, (a_dim, self.m_dim, self.m_dim))
        _require("right_action", self.right_action, (self.m_dim, a_dim, self.m_dim))


@dataclass(frozen=True)
class PoissonBimodule:
    """
    Associative bimodule plus the Lie action ν′(x, m) of the Poisson algebra on M.

    The bracket with M in the first slot is [m, x] := -ν′(x, m).
    """
    associative_part: AssociativeBimodule
    bracket_action: BilinearMap

    @property
    def m_dim(self) -> int:
        return self.associative_part.m_dim

    def validate_shapes(self, a_dim: int) -> None:
        self.associative_part.validate_shapes(a_dim)
        _require("bracket_action", self.bracket_action, (a_dim, self.m_dim, self.m_dim))


# --- regular bimodules -------------------------------------------------

def regular_dialgebra_bimodule(d: Dialgebra) -> DialgebraBimodule:
    return DialgebraBimodule(d.dim, d.left, d.left, d.right, d.right)


def regular_poisson_dialgebra_bimodule(p: PoissonDialgebra) -> PoissonDialgebraBimodule:
    return PoissonDialgebraBimodule(regular_dialgebra_bimodule(p.dialgebra), p.bracket, p.bracket)


def regular_associative_bimodule(a: AssociativeAlgebra) -> AssociativeBimodule:
    return AssociativeBimodule(a.dim, a.product, a.product)


def regular_poisson_bimodule(p: PoissonAlgebra) -> PoissonBimodule:
    return PoissonBimodule(regular_associative_bimodule(p.associative), p.bracket)


# --- operations tables -------------------------------------------------

def _negated_swap(action: BilinearMap):
    def bracket_m_first(m: Vector, x: Vector) -> Vector:
        return tuple(-v for v in action.evaluate(x, m))
    return bracket_m_first


def dialgebra_bimodule_operations(d: Dialgebra, module: DialgebraBimodule) -> Operations:
    table = {
        ("left", ALGEBRA, ALGEBRA): d.left.evaluate,
        ("left", ALGEBRA, MODULE): module.left_dm.evaluate,
        ("left", MODULE, ALGEBRA): module.left_md.evaluate,
        ("right", ALGEBRA, ALGEBRA): d.right.evaluate,
        ("right", ALGEBRA, MODULE): module.right_dm.evaluate,
        ("right", MODULE, ALGEBRA): module.right_md.evaluate,
    }
    return Operations({ALGEBRA: d.dim, MODULE: module.m_dim}, table)


def poisson_dialgebra_bimodule_operations(p: PoissonDialgebra, module: PoissonDialgebraBimodule) -> Operations:
    ops = dialgebra_bimodule_operations(p.dialgebra, module.dialgebra_part)
    ops.table.update({
        ("bracket", ALGEBRA, ALGEBRA): p.bracket.evaluate,
        ("bracket", ALGEBRA, MODULE): module.bracket_dm.evaluate,
        ("bracket", MODULE, ALGEBRA): module.bracket_md.evaluate,
    })
    return ops


def poisson_bimodule_operations(dim: int, product: BilinearMap, bracket: BilinearMap,
                                module: PoissonBimodule) -> Operations:
    assoc = module.associative_part
    table: Dict = {
        ("product", ALGEBRA, ALGEBRA): product.evaluate,
        ("product", ALGEBRA, MODULE): assoc.left_action.evaluate,
        ("product", MODULE, ALGEBRA): assoc.right_action.evaluate,
        ("bracket", ALGEBRA, ALGEBRA): bracket.evaluate,
        ("bracket", ALGEBRA, MODULE): module.bracket_action.evaluate,
        ("bracket", MODULE, ALGEBRA): _negated_swap(module.bracket_action),
    }
    return Operations({ALGEBRA: dim, MODULE: module.m_dim}, table)


# --- checkers ----------------------------------------------------------

def check_dialgebra_bimodule(d: Dialgebra, module: DialgebraBimodule) -> AxiomReport:
    """
    Check the five dialgebra identities in the three single-module placements.

    Args:
        d: The dialgebra
        module: Action tensors on M

    Returns:
        AxiomReport: kind "dialgebra_bimodule" with axioms like "left-associative[AMA]"

    Raises:
        ShapeMismatchError: If an action tensor does not fit d.dim and module.m_dim
    """
    module.validate_shapes(d.dim)
    builder = ReportBuilder("dialgebra_bimodule")
    check_identities(builder, dialgebra_bimodule_operations(d, module), DIALGEBRA_IDENTITIES, SINGLE_MODULE)
    return builder.build()


def check_poisson_dialgebra_bimodule(p: PoissonDialgebra, module: PoissonDialgebraBimodule,
                                     strict: bool = False) -> AxiomReport:
    """
    Check a Poisson dialgebra bimodule.

    Runs the dialgebra-bimodule identities, the Leibniz identity and the three
    bracket/product compatibilities in all single-module placements. With
    strict=True the two mixed skew-symmetries are checked in those placements
    as well.
    """
    module.validate_shapes(p.dim)
    builder = ReportBuilder("poisson_dialgebra_bimodule")
    ops = poisson_dialgebra_bimodule_operations(p, module)
    identities = list(DIALGEBRA_IDENTITIES) + [LEIBNIZ_IDENTITY] + list(COMPATIBILITY_IDENTITIES)
    if strict:
        identities += list(MIXED_SKEW_IDENTITIES)
    check_identities(builder, ops, identities, SINGLE_MODULE)
    return builder.build()


def check_associative_bimodule(a: AssociativeAlgebra, module: AssociativeBimodule) -> AxiomReport:
    module.validate_shapes(a.dim)
    builder = ReportBuilder("associative_bimodule")
    ops = Operations({ALGEBRA: a.dim, MODULE: module.m_dim}, {
        ("product", ALGEBRA, ALGEBRA): a.product.evaluate,
        ("product", ALGEBRA, MODULE): module.left_action.evaluate,
        ("product", MODULE, ALGEBRA): module.right_action.evaluate,
    })
    check_identities(builder, ops, [ASSOCIATIVE_IDENTITY], SINGLE_MODULE)
    return builder.build()


def check_poisson_bimodule(p: PoissonAlgebra, module: PoissonBimodule) -> AxiomReport:
    """
    Check a Poisson bimodule.

    Associative-bimodule identities, the Lie-module law for ν′ and the Leibniz
    rule in all single-module placements.
    """
    module.validate_shapes(p.dim)
    builder = ReportBuilder("poisson_bimodule")
    builder.extend(check_associative_bimodule(p.associative, module.associative_part))
    ops = poisson_bimodule_operations(p.dim, p.product, p.bracket, module)
    check_identities(builder, ops, [LIE_MODULE_IDENTITY], {3: [(ALGEBRA, ALGEBRA, MODULE)]})
    check_identities(builder, ops, [LEIBNIZ_RULE_IDENTITY], SINGLE_MODULE)
    return builder.build()
