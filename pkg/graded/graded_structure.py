"""
Graded Poisson dialgebras of degree n on a finite graded space Gr_0 ⊕ … ⊕ Gr_N.

Structure tensors are stored per pair of component degrees. Products have
degree 0 (Gr_i ⊗ Gr_j → Gr_{i+j}); the bracket has degree −n
(Gr_i ⊗ Gr_j → Gr_{i+j−n}). A pair whose target degree falls outside 0..N has
no tensor and acts as zero.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Tuple

from algebra_core import AxiomReport, BilinearMap, ReportBuilder
from exact_linalg import Matrix, Vector, basis_vector

logger = logging.getLogger(__name__)

DegreePair = Tuple[int, int]

DIALGEBRA_AXIOMS = (
    "left-absorbs-right", "left-associative", "middle-associative",
    "right-absorbs-left", "right-associative",
)
GRADED_AXIOMS = (
    "graded-leibniz",
    "graded-bracket-left-derivation",
    "graded-bracket-bar-insensitive",
    "graded-left-product-bracket",
    "graded-right-product-bracket",
    "graded-mixed-skew-right",
    "graded-mixed-skew-left",
)


def koszul(exponent: int) -> int:
    """(−1)^exponent."""
    return -1 if exponent % 2 else 1


class Homogeneous(NamedTuple):
    """A homogeneous element; vec is empty when the degree lies outside 0..N."""
    degree: int
    vec: Vector


@dataclass(frozen=True)
class GradedAlgebraStructure:
    """
    Degree-0 products and a degree −n bracket on Gr_0 ⊕ … ⊕ Gr_N.

    Attributes:
        component_dims: dim Gr_0, …, dim Gr_N
        degree: n, so the bracket has degree −n
        left, right, bracket: Tensors keyed by (i, j)
        lifts: Optional per-degree section Gr_i → D_i in ambient coordinates
        projections: Optional per-degree projection D_i → Gr_i in ambient coordinates
    """
    component_dims: Tuple[int, ...]
    degree: int
    left: Dict[DegreePair, BilinearMap] = field(default_factory=dict)
    right: Dict[DegreePair, BilinearMap] = field(default_factory=dict)
    bracket: Dict[DegreePair, BilinearMap] = field(default_factory=dict)
    lifts: Tuple[Matrix, ...] = ()
    projections: Tuple[Matrix, ...] = ()

    @classmethod
    def zero(cls, component_dims, degree: int = 0) -> "GradedAlgebraStructure":
        return cls(tuple(component_dims), degree)

    @property
    def top(self) -> int:
        return len(self.component_dims) - 1

    @property
    def total_dim(self) -> int:
        return sum(self.component_dims)

    def in_range(self, degree: int) -> bool:
        return 0 <= degree <= self.top

    def basis(self, degree: int):
        return [Homogeneous(degree, basis_vector(self.component_dims[degree], s))
                for s in range(self.component_dims[degree])]

    def element(self, degree: int, vec) -> Homogeneous:
        return Homogeneous(degree, tuple(vec) if self.in_range(degree) else ())

    # --- operations on homogeneous elements ---------------------------

    def _apply(self, table: Dict[DegreePair, BilinearMap], shift: int,
               x: Homogeneous, y: Homogeneous) -> Homogeneous:
        target = x.degree + y.degree - shift
        if not self.in_range(target):
            return Homogeneous(target, ())
        m = table.get((x.degree, y.degree))
        if m is None or not x.vec or not y.vec:
            return Homogeneous(target, (0,) * self.component_dims[target])
        return Homogeneous(target, m.evaluate(x.vec, y.vec))

    def l(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        return self._apply(self.left, 0, x, y)

    def r(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        return self._apply(self.right, 0, x, y)

    def b(self, x: Homogeneous, y: Homogeneous) -> Homogeneous:
        return self._apply(self.bracket, self.degree, x, y)


def combine(*terms: Tuple[int, Homogeneous]) -> Homogeneous:
    """Σ sign·element over terms of one common degree."""
    degree = terms[0][1].degree
    width = max(len(t.vec) for _, t in terms)
    acc = [0] * width
    for sign, t in terms:
        if t.degree != degree:
            raise ValueError(f"Cannot add elements of degrees {degree} and {t.degree}")
        for k, value in enumerate(t.vec):
            if value:
                acc[k] += sign * value
    return Homogeneous(degree, tuple(acc))


def _same(u: Homogeneous, v: Homogeneous) -> bool:
    return all(a == 0 for a in combine((1, u), (-1, v)).vec)


def _check_bookkeeping(builder: ReportBuilder, g: GradedAlgebraStructure, n: int) -> None:
    builder.declare("degree-bookkeeping")
    if g.degree != n:
        builder.fail("degree-bookkeeping", (g.degree, n),
                     detail=f"bracket has degree {-g.degree}, not {-n}")
        return
    dims = g.component_dims
    for name, table, shift in (("left", g.left, 0), ("right", g.right, 0), ("bracket", g.bracket, n)):
        for (i, j), m in sorted(table.items()):
            target = i + j - shift
            expected = (dims[i], dims[j], dims[target]) if g.in_range(i) and g.in_range(j) \
                and g.in_range(target) else None
            if m.shape != expected:
                builder.fail("degree-bookkeeping", (i, j),
                             detail=f"{name} component ({i}, {j}) has shape {m.shape}, expected {expected}")


def check_graded_poisson_dialgebra(g: GradedAlgebraStructure, n: int) -> AxiomReport:
    """
    Check the graded Poisson dialgebra axioms of degree n.

    Degree bookkeeping runs first; if any tensor connects the wrong degrees the
    identities are not evaluated. Otherwise, over all homogeneous basis triples
    with degrees (i, j, k) and indices (s, t, u), recorded as (i, j, k, s, t, u):

    - dialgebra identities, unsigned
    - [[x,y],z] = (−1)^{(j−n)(k−n)} [[x,z],y] + [x,[y,z]]
    - [x,y⊣z] = (−1)^{j(i−n)} y⊢[x,z] + [x,y]⊣z = [x,y⊢z]
    - [x⊣y,z] = x⊣[y,z] + (−1)^{j(k−n)} [x,z]⊣y, and likewise for ⊢
    - [x,y]⊢z = −(−1)^{(i−n)(j−n)} [y,x]⊢z
    - x⊣[y,z] = −(−1)^{(j−n)(k−n)} x⊣[z,y]
    """
    builder = ReportBuilder(f"graded_poisson_dialgebra_{n}")
    _check_bookkeeping(builder, g, n)
    if builder.violations:
        return builder.build()
    builder.declare(*DIALGEBRA_AXIOMS, *GRADED_AXIOMS)

    l, r, b = g.l, g.r, g.b
    degrees = range(len(g.component_dims))
    for i, j, k in itertools.product(degrees, repeat=3):
        for (s, x), (t, y), (u, z) in itertools.product(enumerate(g.basis(i)), enumerate(g.basis(j)),
                                                        enumerate(g.basis(k))):
            index = (i, j, k, s, t, u)
            checks = [
                ("left-absorbs-right", l(l(x, y), z), l(x, r(y, z))),
                ("left-associative", l(l(x, y), z), l(x, l(y, z))),
                ("middle-associative", l(r(x, y), z), r(x, l(y, z))),
                ("right-absorbs-left", r(l(x, y), z), r(x, r(y, z))),
                ("right-associative", r(r(x, y), z), r(x, r(y, z))),
                ("graded-leibniz", b(b(x, y), z),
                 combine((koszul((j - n) * (k - n)), b(b(x, z), y)), (1, b(x, b(y, z))))),
                ("graded-bracket-left-derivation", b(x, l(y, z)),
                 combine((koszul(j * (i - n)), r(y, b(x, z))), (1, l(b(x, y), z)))),
                ("graded-bracket-bar-insensitive", b(x, l(y, z)), b(x, r(y, z))),
                ("graded-left-product-bracket", b(l(x, y), z),
                 combine((1, l(x, b(y, z))), (koszul(j * (k - n)), l(b(x, z), y)))),
                ("graded-right-product-bracket", b(r(x, y), z),
                 combine((1, r(x, b(y, z))), (koszul(j * (k - n)), r(b(x, z), y)))),
                ("graded-mixed-skew-right", r(b(x, y), z),
                 combine((-koszul((i - n) * (j - n)), r(b(y, x), z)))),
                ("graded-mixed-skew-left", l(x, b(y, z)),
                 combine((-koszul((j - n) * (k - n)), l(x, b(z, y))))),
            ]
            for axiom, lhs, rhs in checks:
                if not _same(lhs, rhs):
                    builder.fail(axiom, index, lhs.vec, rhs.vec)
    return builder.build()


def is_gr_commutative(g: GradedAlgebraStructure) -> bool:
    """True iff x⊣y = y⊢x for every pair of homogeneous basis elements."""
    degrees = range(len(g.component_dims))
    for i, j in itertools.product(degrees, repeat=2):
        for x, y in itertools.product(g.basis(i), g.basis(j)):
            if not _same(g.l(x, y), g.r(y, x)):
                return False
    return True

