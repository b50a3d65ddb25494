"""
Immutable coordinate vectors over the rationals.

A vector is a plain tuple of Fractions; helpers here keep the arithmetic exact
and check lengths.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .rational import RationalLike, to_fraction

Vector = Tuple[Fraction, ...]

ZERO = Fraction(0)


class AmbientMismatchError(ValueError):
    """Raised when vectors or subspaces live in different ambient spaces."""

    def __init__(self, expected: int, actual: int, what: str = "vector"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Ambient dimension mismatch for {what}: expected {expected}, got {actual}")


def vector(values: Iterable[RationalLike]) -> Vector:
    """Build a vector from ints, Fractions or rational literals."""
    return tuple(to_fraction(v) for v in values)


def zero_vector(dim: int) -> Vector:
    return (ZERO,) * dim


def basis_vector(dim: int, index: int) -> Vector:
    """The standard basis vector e_index of K^dim."""
    if not 0 <= index < dim:
        raise IndexError(f"Basis index {index} out of range for dimension {dim}")
    return tuple(Fraction(1) if i == index else ZERO for i in range(dim))


def _check_lengths(u: Sequence[Fraction], v: Sequence[Fraction]) -> None:
    if len(u) != len(v):
        raise AmbientMismatchError(len(u), len(v))


def add(u: Vector, v: Vector) -> Vector:
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _check_lengths(u, v)
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def scale(coefficient: RationalLike, u: Vector) -> Vector:
    c = to_fraction(coefficient)
    if c == 0:
        return zero_vector(len(u))
    return tuple(c * a for a in u)


def linear_combination(dim: int, terms: Iterable[Tuple[RationalLike, Vector]]) -> Vector:
    """
    Sum of coefficient * vector over the given terms.

    Args:
        dim: Ambient dimension (used for the empty sum)
        terms: Pairs (coefficient, vector)

    Returns:
        Vector: The combination, exactly
    """
    acc = [ZERO] * dim
    for coefficient, u in terms:
        c = to_fraction(coefficient)
        if c == 0:
            continue
        if len(u) != dim:
            raise AmbientMismatchError(dim, len(u))
        for i, a in enumerate(u):
            if a:
                acc[i] += c * a
    return tuple(acc)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def dot(u: Vector, v: Vector) -> Fraction:
    _check_lengths(u, v)
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)
