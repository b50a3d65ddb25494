"""
Identity tables and the generic evaluator behind every checker.

An identity is a function of an ``Operations`` object and k basis elements
returning (lhs, rhs). Elements are tagged with the space they live in ("A" for
the algebra, "M" for a module), so the same identity table checks an algebra
and all single-module placements of a bimodule.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, NamedTuple, Sequence, Tuple

from exact_linalg import Vector, basis_vector
from exact_linalg.vectors import ZERO

from .errors import ShapeMismatchError
from .reports import ReportBuilder

logger = logging.getLogger(__name__)

ALGEBRA = "A"
MODULE = "M"


class Elem(NamedTuple):
    """Vector tagged with its space."""
    space: str
    vec: Vector


BinaryFn = Callable[[Vector, Vector], Vector]


class Operations:
    """
    Dispatch table for products and brackets on tagged elements.

    Keys are (operation, left space, right space); operations are
    "left" (⊣), "right" (⊢), "product" (·) and "bracket" ([−,−]).
    """

    def __init__(self, dims: Dict[str, int], table: Dict[Tuple[str, str, str], BinaryFn]):
        self.dims = dict(dims)
        self.table = dict(table)

    def apply(self, op: str, x: Elem, y: Elem) -> Elem:
        key = (op, x.space, y.space)
        fn = self.table.get(key)
        if fn is None:
            raise ShapeMismatchError(f"No {op} defined for placement {x.space}{y.space}")
        space = ALGEBRA if x.space == ALGEBRA and y.space == ALGEBRA else MODULE
        return Elem(space, fn(x.vec, y.vec))

    def l(self, x: Elem, y: Elem) -> Elem:
        return self.apply("left", x, y)

    def r(self, x: Elem, y: Elem) -> Elem:
        return self.apply("right", x, y)

    def p(self, x: Elem, y: Elem) -> Elem:
        return self.apply("product", x, y)

    def b(self, x: Elem, y: Elem) -> Elem:
        return self.apply("bracket", x, y)

    @staticmethod
    def add(*terms: Elem) -> Elem:
        space = terms[0].space
        acc = list(terms[0].vec)
        for t in terms[1:]:
            if t.space != space:
                raise ShapeMismatchError(f"Cannot add elements of {space} and {t.space}")
            for i, value in enumerate(t.vec):
                if value:
                    acc[i] += value
        return Elem(space, tuple(acc))

    @staticmethod
    def neg(x: Elem) -> Elem:
        return Elem(x.space, tuple(-v for v in x.vec))

    @classmethod
    def sub(cls, x: Elem, y: Elem) -> Elem:
        return cls.add(x, cls.neg(y))

    def zero(self, space: str) -> Elem:
        return Elem(space, (ZERO,) * self.dims[space])


@dataclass(frozen=True)
class Identity:
    """A named multilinear identity lhs = rhs."""
    name: str
    arity: int
    formula: str
    sides: Callable[..., Tuple[Elem, Elem]]


# === DIALGEBRA IDENTITIES ===
DIALGEBRA_IDENTITIES: Tuple[Identity, ...] = (
    Identity("left-absorbs-right", 3, "(x⊣y)⊣z = x⊣(y⊢z)",
             lambda o, x, y, z: (o.l(o.l(x, y), z), o.l(x, o.r(y, z)))),
    Identity("left-associative", 3, "(x⊣y)⊣z = x⊣(y⊣z)",
             lambda o, x, y, z: (o.l(o.l(x, y), z), o.l(x, o.l(y, z)))),
    Identity("middle-associative", 3, "(x⊢y)⊣z = x⊢(y⊣z)",
             lambda o, x, y, z: (o.l(o.r(x, y), z), o.r(x, o.l(y, z)))),
    Identity("right-absorbs-left", 3, "(x⊣y)⊢z = x⊢(y⊢z)",
             lambda o, x, y, z: (o.r(o.l(x, y), z), o.r(x, o.r(y, z)))),
    Identity("right-associative", 3, "(x⊢y)⊢z = x⊢(y⊢z)",
             lambda o, x, y, z: (o.r(o.r(x, y), z), o.r(x, o.r(y, z)))),
)

DIALGEBRA_ALTERNATIVE_IDENTITIES: Tuple[Identity, ...] = (
    Identity("left-associative", 3, "(x⊣y)⊣z = x⊣(y⊣z)",
             lambda o, x, y, z: (o.l(o.l(x, y), z), o.l(x, o.l(y, z)))),
    Identity("right-associative", 3, "(x⊢y)⊢z = x⊢(y⊢z)",
             lambda o, x, y, z: (o.r(o.r(x, y), z), o.r(x, o.r(y, z)))),
    Identity("left-bar", 3, "x⊣(y⊣z) = x⊣(y⊢z)",
             lambda o, x, y, z: (o.l(x, o.l(y, z)), o.l(x, o.r(y, z)))),
    Identity("middle-associative", 3, "(x⊢y)⊣z = x⊢(y⊣z)",
             lambda o, x, y, z: (o.l(o.r(x, y), z), o.r(x, o.l(y, z)))),
    Identity("right-bar", 3, "(x⊣y)⊢z = (x⊢y)⊢z",
             lambda o, x, y, z: (o.r(o.l(x, y), z), o.r(o.r(x, y), z))),
)

# === BRACKET IDENTITIES ===
LEIBNIZ_IDENTITY = Identity(
    "leibniz-identity", 3, "[[x,y],z] = [[x,z],y] + [x,[y,z]]",
    lambda o, x, y, z: (o.b(o.b(x, y), z), o.add(o.b(o.b(x, z), y), o.b(x, o.b(y, z)))),
)

ASSOCIATIVE_IDENTITY = Identity(
    "associative", 3, "(xy)z = x(yz)",
    lambda o, x, y, z: (o.p(o.p(x, y), z), o.p(x, o.p(y, z))),
)

ANTISYMMETRY_IDENTITY = Identity(
    "antisymmetry", 2, "[x,y] = -[y,x]",
    lambda o, x, y: (o.b(x, y), o.neg(o.b(y, x))),
)

JACOBI_IDENTITY = Identity(
    "jacobi", 3, "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0",
    lambda o, x, y, z: (o.add(o.b(x, o.b(y, z)), o.b(y, o.b(z, x)), o.b(z, o.b(x, y))), o.zero(ALGEBRA)),
)

LEIBNIZ_RULE_IDENTITY = Identity(
    "leibniz-rule", 3, "[x,yz] = y[x,z] + [x,y]z",
    lambda o, x, y, z: (o.b(x, o.p(y, z)), o.add(o.p(y, o.b(x, z)), o.p(o.b(x, y), z))),
)

# Lie-module law for a bracket action written x ↦ [x, −] on the module.
LIE_MODULE_IDENTITY = Identity(
    "lie-module", 3, "[[x,y],m] = [x,[y,m]] - [y,[x,m]]",
    lambda o, x, y, m: (o.b(o.b(x, y), m), o.sub(o.b(x, o.b(y, m)), o.b(y, o.b(x, m)))),
)

# === POISSON DIALGEBRA COMPATIBILITIES ===
COMPATIBILITY_IDENTITIES: Tuple[Identity, ...] = (
    Identity("bracket-left-derivation", 3, "[x,y⊣z] = y⊢[x,z] + [x,y]⊣z",
             lambda o, x, y, z: (o.b(x, o.l(y, z)), o.add(o.r(y, o.b(x, z)), o.l(o.b(x, y), z)))),
    Identity("bracket-bar-insensitive", 3, "[x,y⊣z] = [x,y⊢z]",
             lambda o, x, y, z: (o.b(x, o.l(y, z)), o.b(x, o.r(y, z)))),
    Identity("left-product-bracket", 3, "[x⊣y,z] = x⊣[y,z] + [x,z]⊣y",
             lambda o, x, y, z: (o.b(o.l(x, y), z), o.add(o.l(x, o.b(y, z)), o.l(o.b(x, z), y)))),
    Identity("right-product-bracket", 3, "[x⊢y,z] = x⊢[y,z] + [x,z]⊢y",
             lambda o, x, y, z: (o.b(o.r(x, y), z), o.add(o.r(x, o.b(y, z)), o.r(o.b(x, z), y)))),
)

MIXED_SKEW_IDENTITIES: Tuple[Identity, ...] = (
    Identity("mixed-skew-right", 3, "[x,y]⊢z = -[y,x]⊢z",
             lambda o, x, y, z: (o.r(o.b(x, y), z), o.neg(o.r(o.b(y, x), z)))),
    Identity("mixed-skew-left", 3, "x⊣[y,z] = -x⊣[z,y]",
             lambda o, x, y, z: (o.l(x, o.b(y, z)), o.neg(o.l(x, o.b(z, y))))),
)


def algebra_operations(dim: int, **maps) -> Operations:
    """
    Operations on a single algebra.

    Args:
        dim: Dimension of the algebra
        **maps: op name → BilinearMap, e.g. left=..., right=..., bracket=...
    """
    table = {(op, ALGEBRA, ALGEBRA): m.evaluate for op, m in maps.items()}
    return Operations({ALGEBRA: dim}, table)


def single_module_placements(arity: int) -> List[Tuple[str, ...]]:
    """All placements with exactly one entry in M, M moving left to right."""
    return [tuple(MODULE if p == i else ALGEBRA for p in range(arity)) for i in range(arity)]


def placement_label(identity: Identity, placement: Sequence[str]) -> str:
    return f"{identity.name}[{''.join(placement)}]"


def check_identities(builder: ReportBuilder, ops: Operations, identities: Iterable[Identity],
                     placements: Dict[int, List[Tuple[str, ...]]] = None) -> None:
    """
    Evaluate identities exhaustively over basis tuples.

    Args:
        builder: Report to record into
        ops: Operations providing every map the identities use
        identities: Identity table
        placements: arity → list of space placements; None means all-algebra
            entries with plain axiom names
    """
    basis = {space: [Elem(space, basis_vector(dim, i)) for i in range(dim)]
             for space, dim in ops.dims.items()}

    for identity in identities:
        if placements is None:
            todo = [((ALGEBRA,) * identity.arity, identity.name)]
        else:
            todo = [(pl, placement_label(identity, pl)) for pl in placements[identity.arity]]
        for placement, label in todo:
            builder.declare(label)
            pools = [basis[space] for space in placement]
            ranges = [range(len(pool)) for pool in pools]
            for indices in itertools.product(*ranges):
                elems = [pool[i] for pool, i in zip(pools, indices)]
                lhs, rhs = identity.sides(ops, *elems)
                builder.compare(label, indices, lhs.vec, rhs.vec)
