"""
Subspaces of K^n in canonical form and quotient data.

A Subspace stores the reduced row echelon basis of its span, so two subspaces
are equal exactly when their stored bases are identical.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .matrix import Matrix, rref, stack_rows
from .vectors import AmbientMismatchError, Vector, ZERO, is_zero

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace: RREF basis rows plus their pivot columns."""
    ambient_dim: int
    basis: Matrix
    pivots: Tuple[int, ...]

    def __post_init__(self):
        if self.basis.cols != self.ambient_dim:
            raise AmbientMismatchError(self.ambient_dim, self.basis.cols, "subspace basis")
        if self.basis.rows != len(self.pivots):
            raise ValueError("Subspace basis must have one pivot per row")

    @classmethod
    def from_spanning(cls, ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> "Subspace":
        """
        Canonical subspace spanned by the given vectors.

        Args:
            ambient_dim: Dimension n of K^n
            vectors: Any spanning family (may be empty or dependent)

        Returns:
            Subspace: Span in canonical form
        """
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise AmbientMismatchError(ambient_dim, len(v))
        rows = [v for v in rows if not is_zero(v)]
        if not rows:
            return cls.zero(ambient_dim)
        reduced, pivots = rref(stack_rows(rows, ambient_dim))
        basis = stack_rows([reduced.row(r) for r in range(len(pivots))], ambient_dim)
        return cls(ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> List[Vector]:
        return self.basis.row_vectors()

    def residual(self, v: Sequence[Fraction]) -> Vector:
        """v minus its pivot-coordinate combination; zero iff v lies in the subspace."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatchError(self.ambient_dim, len(v))
        out = list(v)
        for r, p in enumerate(self.pivots):
            c = v[p]
            if c:
                for j, b in enumerate(self.basis.row(r)):
                    if b:
                        out[j] -= c * b
        return tuple(out)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return is_zero(self.residual(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatchError(self.ambient_dim, other.ambient_dim, "subspace")
        return all(self.contains(v) for v in other.vectors())

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        """
        Coordinates of a member vector with respect to the canonical basis.

        Raises:
            ValueError: If v is not in the subspace
        """
        if not self.contains(v):
            raise ValueError("Vector is not a member of the subspace")
        return tuple(v[p] for p in self.pivots)

    def inclusion(self) -> Matrix:
        """ambient_dim × dim matrix whose columns are the basis vectors."""
        return self.basis.transpose()

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={self.pivots})"


def span(ambient_dim: int, vectors: Iterable[Sequence[Fraction]]) -> Subspace:
    return Subspace.from_spanning(ambient_dim, vectors)


def kernel(m: Matrix) -> Subspace:
    """
    Null space {v : m·v = 0} in canonical form.

    Args:
        m: Any matrix (rows may be zero)

    Returns:
        Subspace: Kernel of m inside K^cols
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    generators = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.entry(r, f)
        generators.append(tuple(v))
    result = Subspace.from_spanning(m.cols, generators)
    logger.debug(f"Kernel of {m.rows}x{m.cols} matrix has dimension {result.dim}")
    return result


def annihilator(s: Subspace) -> Subspace:
    """Vectors w with b·w = 0 for every basis vector b of s."""
    return kernel(s.basis)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """
    Set-theoretic intersection of two subspaces.

    Raises:
        AmbientMismatchError: If the ambient dimensions differ
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise AmbientMismatchError(s1.ambient_dim, s2.ambient_dim, "subspace")
    n = s1.ambient_dim
    constraints = annihilator(s1).vectors() + annihilator(s2).vectors()
    return kernel(stack_rows(constraints, n))


def intersect_all(ambient_dim: int, subspaces: Iterable[Subspace]) -> Subspace:
    result = Subspace.full(ambient_dim)
    for s in subspaces:
        result = intersect(result, s)
    return result


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    if s1.ambient_dim != s2.ambient_dim:
        raise AmbientMismatchError(s1.ambient_dim, s2.ambient_dim, "subspace")
    return Subspace.from_spanning(s1.ambient_dim, s1.vectors() + s2.vectors())


@dataclass(frozen=True)
class QuotientData:
    """
    Quotient K^n / kernel with a fixed projection and section.

    The section embeds the quotient as the span of the non-pivot coordinates
    of the kernel's canonical basis.
    """
    ambient_dim: int
    kernel: Subspace
    quotient_dim: int
    projection: Matrix
    section: Matrix

    def project(self, v: Sequence[Fraction]) -> Vector:
        return self.projection.apply(v)

    def lift(self, v: Sequence[Fraction]) -> Vector:
        return self.section.apply(v)


def quotient_data(ambient_dim: int, kernel_space: Subspace) -> QuotientData:
    """
    Projection and section for K^ambient_dim / kernel_space.

    Args:
        ambient_dim: n
        kernel_space: Subspace of K^n to divide out

    Returns:
        QuotientData: projection (q × n) and section (n × q) with projection∘section = id
    """
    if kernel_space.ambient_dim != ambient_dim:
        raise AmbientMismatchError(ambient_dim, kernel_space.ambient_dim, "quotient kernel")

    pivots = kernel_space.pivots
    pivot_set = set(pivots)
    complement = [j for j in range(ambient_dim) if j not in pivot_set]
    position = {j: t for t, j in enumerate(complement)}
    q = len(complement)

    section = Matrix.from_entries(ambient_dim, q, [(j, t, 1) for t, j in enumerate(complement)])

    proj_entries = []
    for j in complement:
        proj_entries.append((position[j], j, Fraction(1)))
    for r, p in enumerate(pivots):
        row = kernel_space.basis.row(r)
        for j in complement:
            if row[j]:
                proj_entries.append((position[j], p, -row[j]))
    projection = Matrix.from_entries(q, ambient_dim, proj_entries)

    logger.debug(f"Quotient of K^{ambient_dim} by a {kernel_space.dim}-dim subspace: dim {q}")
    return QuotientData(ambient_dim, kernel_space, q, projection, section)
