"""
Filtered dialgebras.

A filtration is a finite chain D_0 ⊆ D_1 ⊆ … ⊆ D_N = D with
D_i ⊣ D_j, D_i ⊢ D_j ⊆ D_{i+j}. Steps past N are the whole space and D_{-1} = 0.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from algebra_core import AxiomReport, Dialgebra, ReportBuilder
from exact_linalg import AmbientMismatchError, Subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilteredDialgebra:
    """
    A dialgebra with a finite increasing filtration.

    Attributes:
        base: The dialgebra D
        steps: D_0, …, D_N as canonical subspaces of K^dim
    """
    base: Dialgebra
    steps: Tuple[Subspace, ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("A filtration needs at least one step")
        for step in self.steps:
            if step.ambient_dim != self.base.dim:
                raise AmbientMismatchError(self.base.dim, step.ambient_dim, "filtration step")

    @classmethod
    def from_spans(cls, base: Dialgebra, spans: Sequence[Sequence[Sequence]]) -> "FilteredDialgebra":
        """Build from spanning vectors of each step."""
        return cls(base, tuple(Subspace.from_spanning(base.dim, vectors) for vectors in spans))

    @property
    def top(self) -> int:
        """N, the index of the last step."""
        return len(self.steps) - 1

    def step(self, i: int) -> Subspace:
        """D_i with D_i = 0 below zero and D_i = D_N above N."""
        if i < 0:
            return Subspace.zero(self.base.dim)
        return self.steps[min(i, self.top)]


def check_filtration(fd: FilteredDialgebra) -> AxiomReport:
    """
    Check chain inclusions, D_N = D and D_i ∘ D_j ⊆ D_{min(i+j, N)}.

    Containment indices are (i, j, s, t) for the s-th basis vector of D_i and
    the t-th basis vector of D_j.
    """
    builder = ReportBuilder("filtration", ["chain-inclusion", "top-is-full", "left-containment", "right-containment"])
    n = fd.base.dim

    for i in range(1, len(fd.steps)):
        if not fd.steps[i].contains_subspace(fd.steps[i - 1]):
            builder.fail("chain-inclusion", (i,), detail=f"D_{i - 1} is not contained in D_{i}")
    if fd.steps[-1].dim != n:
        builder.fail("top-is-full", (fd.top,), detail=f"D_{fd.top} has dimension {fd.steps[-1].dim} of {n}")

    for i, j in itertools.product(range(len(fd.steps)), repeat=2):
        target = fd.step(i + j)
        for (s, u), (t, v) in itertools.product(enumerate(fd.steps[i].vectors()),
                                                enumerate(fd.steps[j].vectors())):
            for axiom, product in (("left-containment", fd.base.left), ("right-containment", fd.base.right)):
                value = product.evaluate(u, v)
                if not target.contains(value):
                    builder.fail(axiom, (i, j, s, t), value, target.residual(value),
                                 detail=f"product leaves D_{min(i + j, fd.top)}")
    return builder.build()


def trivial_filtration(d: Dialgebra) -> FilteredDialgebra:
    """The one-step filtration D_0 = D."""
    return FilteredDialgebra(d, (Subspace.full(d.dim),))


def product_powers(d: Dialgebra, highest: int) -> List[Subspace]:
    """
    [D^(1), …, D^(highest)] with D^(1) = D and D^(k) spanned by u∘v, u ∈ D^(a), v ∈ D^(b), a + b = k.
    """
    powers = [Subspace.full(d.dim)]
    for k in range(2, highest + 1):
        generators = []
        for a in range(1, k):
            b = k - a
            for u, v in itertools.product(powers[a - 1].vectors(), powers[b - 1].vectors()):
                generators.append(d.left.evaluate(u, v))
                generators.append(d.right.evaluate(u, v))
        powers.append(Subspace.from_spanning(d.dim, generators))
    return powers


def power_filtration(d: Dialgebra, levels: int) -> FilteredDialgebra:
    """
    The filtration D_i = D^(N+1−i) for i = 0, …, N with N = levels.

    It is a filtration for every dialgebra since D^(a) ∘ D^(b) ⊆ D^(a+b).
    """
    if levels < 1:
        raise ValueError(f"levels must be at least 1, got {levels}")
    powers = product_powers(d, levels + 1)
    steps = tuple(powers[levels - i] for i in range(levels + 1))
    logger.debug(f"Power filtration dims {[s.dim for s in steps]}")
    return FilteredDialgebra(d, steps)
