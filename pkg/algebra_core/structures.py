"""
Algebra flavors represented by structure constants.

All structures are immutable dataclasses over a single coordinate space K^dim.
Validity is not enforced on construction; the checkers in ``checkers`` decide
it and constructions call them before relying on an axiom.
"""

from dataclasses import dataclass
from enum import Enum

from .errors import ShapeMismatchError
from .multilinear import BilinearMap


class StructureKind(Enum):
    """Kinds of structure understood by the checkers and the document format."""
    ASSOCIATIVE = "associative"
    DIALGEBRA = "dialgebra"
    LEIBNIZ = "leibniz"
    LIE = "lie"
    POISSON = "poisson"
    POISSON_DIALGEBRA = "poisson_dialgebra"


def _require_square(name: str, dim: int, b: BilinearMap) -> None:
    if b.shape != (dim, dim, dim):
        raise ShapeMismatchError(f"{name} has shape {b.shape}, expected {(dim, dim, dim)}")


@dataclass(frozen=True)
class AssociativeAlgebra:
    """Finite-dimensional (not necessarily unital) associative algebra."""
    dim: int
    product: BilinearMap

    def __post_init__(self):
        _require_square("product", self.dim, self.product)

    @classmethod
    def zero(cls, dim: int) -> "AssociativeAlgebra":
        return cls(dim, BilinearMap.square_zeros(dim))

    def as_dialgebra(self) -> "Dialgebra":
        """The dialgebra with ⊣ = ⊢ = the product."""
        return Dialgebra(self.dim, self.product, self.product)


@dataclass(frozen=True)
class Dialgebra:
    """Vector space with a left product ⊣ and a right product ⊢."""
    dim: int
    left: BilinearMap
    right: BilinearMap

    def __post_init__(self):
        _require_square("left product", self.dim, self.left)
        _require_square("right product", self.dim, self.right)

    @classmethod
    def zero(cls, dim: int) -> "Dialgebra":
        zero = BilinearMap.square_zeros(dim)
        return cls(dim, zero, zero)


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Vector space with a (right) Leibniz bracket."""
    dim: int
    bracket: BilinearMap

    def __post_init__(self):
        _require_square("bracket", self.dim, self.bracket)


@dataclass(frozen=True)
class PoissonAlgebra:
    """Associative product plus a Lie bracket satisfying the Leibniz rule."""
    dim: int
    product: BilinearMap
    bracket: BilinearMap

    def __post_init__(self):
        _require_square("product", self.dim, self.product)
        _require_square("bracket", self.dim, self.bracket)

    @classmethod
    def zero(cls, dim: int) -> "PoissonAlgebra":
        zero = BilinearMap.square_zeros(dim)
        return cls(dim, zero, zero)

    @property
    def associative(self) -> AssociativeAlgebra:
        return AssociativeAlgebra(self.dim, self.product)

    def as_poisson_dialgebra(self) -> "PoissonDialgebra":
        """The Poisson dialgebra with ⊣ = ⊢ = the product."""
        return PoissonDialgebra(self.dim, self.product, self.product, self.bracket)


@dataclass(frozen=True)
class PoissonDialgebra:
    """Dialgebra plus a Leibniz bracket (the central object of the toolkit)."""
    dim: int
    left: BilinearMap
    right: BilinearMap
    bracket: BilinearMap

    def __post_init__(self):
        _require_square("left product", self.dim, self.left)
        _require_square("right product", self.dim, self.right)
        _require_square("bracket", self.dim, self.bracket)

    @classmethod
    def zero(cls, dim: int) -> "PoissonDialgebra":
        zero = BilinearMap.square_zeros(dim)
        return cls(dim, zero, zero, zero)

    @property
    def dialgebra(self) -> Dialgebra:
        return Dialgebra(self.dim, self.left, self.right)

    @property
    def leibniz(self) -> LeibnizAlgebra:
        return LeibnizAlgebra(self.dim, self.bracket)
