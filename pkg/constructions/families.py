"""
Seeded generation of valid instances from construction families.

Valid dialgebras are rare among raw tensors, so instances are built from
families that are valid by construction: associative algebras viewed as
dialgebras, Poisson-bimodule maps, square-zero derivations and averaging
operators. Every draw comes from one random.Random(seed), so a seed fixes the
whole sequence.
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from algebra_core import (
    AssociativeAlgebra, BilinearMap, Dialgebra, LinearOperator, PoissonAlgebra, PoissonDialgebra,
)
from exact_linalg import Matrix, basis_vector, kernel, linear_combination

from .fixtures import (
    commutator_poisson, direct_sum, heisenberg_lie, matrix_algebra, nonabelian_lie_2,
    pointwise_algebra, poisson_direct_sum, sl2_lie, truncated_polynomial, upper_triangular,
    zero_algebra,
)
from .ideals import center_of_product
from .lm_objects import PoissonLMObject, poisson_dialgebra_from_bimodule_map
from .operators import check_averaging, poisson_dialgebra_from_averaging, poisson_dialgebra_from_differential

logger = logging.getLogger(__name__)

SMALL_COEFFICIENTS = (-2, -1, 0, 1, 2)
BRACKET_SCALES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def _elementary(n: int, r: int, c: int, value: int) -> Matrix:
    return Matrix.identity(n).add(Matrix.from_entries(n, n, [(r, c, value)]))


def _solution_matrices(rows: List[List[Fraction]], unknowns: int, shape: Tuple[int, int]) -> List[Matrix]:
    """Basis of the solution space of a homogeneous system, reshaped row-major into matrices."""
    space = kernel(Matrix.from_rows(rows, cols=unknowns))
    return [Matrix(shape[0], shape[1], tuple(v)) for v in space.vectors()]


def _combination(shape: Tuple[int, int], basis: Sequence[Matrix], coefficients: Sequence[int]) -> Matrix:
    result = Matrix.zeros(*shape)
    for c, m in zip(coefficients, basis):
        if c:
            result = result.add(m.scaled(c))
    return result


def derivation_space(dim: int, maps: Sequence[BilinearMap]) -> List[Matrix]:
    """
    Basis of {d : d(xy) = d(x)y + x d(y)} for every given square map.

    The unknown d[k][l] is variable k·dim + l.
    """
    rows: List[List[Fraction]] = []
    for m in maps:
        for i, j, k in itertools.product(range(dim), repeat=3):
            row = [Fraction(0)] * (dim * dim)
            # d(e_i e_j)_k
            for l, value in enumerate(m.product(i, j)):
                row[k * dim + l] += value
            # (d(e_i) e_j)_k + (e_i d(e_j))_k
            for l in range(dim):
                row[l * dim + i] -= m.product(l, j)[k]
                row[l * dim + j] -= m.product(i, l)[k]
            if any(row):
                rows.append(row)
    return _solution_matrices(rows, dim * dim, (dim, dim))


def bimodule_map_space(p: PoissonAlgebra, copies: int, trivial: int) -> Tuple[PoissonLMObject, List[Matrix]]:
    """
    The module M = P^copies ⊕ K^trivial and a basis of all Poisson-bimodule maps M → P.

    P acts on each copy of itself by multiplication and bracket, and by zero on
    the trivial summand.

    Returns:
        Tuple[PoissonLMObject, List[Matrix]]: The object with f = 0 and the
        solution basis for f
    """
    n = p.dim
    m_dim = n * copies + trivial
    left, right, lie = [], [], []
    for c in range(copies):
        offset = c * n
        for i, j, k, v in p.product.entries():
            left.append((i, offset + j, offset + k, v))
            right.append((offset + i, j, offset + k, v))
        for i, j, k, v in p.bracket.entries():
            lie.append((i, offset + j, offset + k, v))
    left_action = BilinearMap.from_entries((n, m_dim, m_dim), left)
    right_action = BilinearMap.from_entries((m_dim, n, m_dim), right)
    bracket_action = BilinearMap.from_entries((n, m_dim, m_dim), lie)

    # Unknown f[k][l] is variable k·m_dim + l
    unknowns = n * m_dim
    rows: List[List[Fraction]] = []
    conditions = [
        (lambda a, m: left_action.product(a, m), lambda a, l: p.product.product(a, l)),
        (lambda a, m: right_action.product(m, a), lambda a, l: p.product.product(l, a)),
        (lambda a, m: bracket_action.product(a, m), lambda a, l: p.bracket.product(a, l)),
    ]
    for acted, downstairs in conditions:
        for a, m, k in itertools.product(range(n), range(m_dim), range(n)):
            row = [Fraction(0)] * unknowns
            for l, value in enumerate(acted(a, m)):
                row[k * m_dim + l] += value
            for l in range(n):
                row[l * m_dim + m] -= downstairs(a, l)[k]
            if any(row):
                rows.append(row)

    o = PoissonLMObject(m_dim, p, Matrix.zeros(n, m_dim), left_action, right_action, bracket_action)
    return o, _solution_matrices(rows, unknowns, (n, m_dim))


class InstanceGenerator:
    """
    Random valid instances drawn from construction families.

    Attributes:
        seed: Seed of the underlying random.Random
        max_dim: Upper bound on the dimension of every generated structure
        max_attempts: Bound on the square-zero search per differential
    """

    def __init__(self, seed: int, max_dim: int = 5, max_attempts: int = 64):
        if max_dim < 1:
            raise ValueError(f"max_dim must be at least 1, got {max_dim}")
        self.seed = seed
        self.max_dim = max_dim
        self.max_attempts = max_attempts
        self.rng = random.Random(seed)

    # --- associative algebras -----------------------------------------

    def _associative_choices(self, bound: int) -> List[Callable[[], AssociativeAlgebra]]:
        choices: List[Callable[[], AssociativeAlgebra]] = []
        for k in range(1, bound + 1):
            choices.append(lambda k=k: zero_algebra(k))
            choices.append(lambda k=k: truncated_polynomial(k))
            choices.append(lambda k=k: pointwise_algebra(k))
        for n in (2, 3, 4):
            if n * (n - 1) // 2 <= bound:
                choices.append(lambda n=n: upper_triangular(n))
        if bound >= 3:
            choices.append(lambda: upper_triangular(2, strict=False))
        if bound >= 4:
            choices.append(lambda: matrix_algebra(2))
        return choices

    def _base_associative(self, bound: int) -> AssociativeAlgebra:
        if bound >= 2 and self.rng.random() < 0.25:
            first = self.rng.randint(1, bound - 1)
            a = self.rng.choice(self._associative_choices(first))()
            b = self.rng.choice(self._associative_choices(bound - a.dim))()
            return direct_sum(a, b)
        return self.rng.choice(self._associative_choices(bound))()

    def basis_change(self, dim: int) -> Tuple[Matrix, Matrix]:
        """A random unimodular integer matrix P and its inverse, as products of elementary matrices."""
        p, p_inv = Matrix.identity(dim), Matrix.identity(dim)
        if dim < 2:
            return p, p_inv
        for _ in range(self.rng.randint(0, 3)):
            r, c = self.rng.sample(range(dim), 2)
            value = self.rng.choice((-2, -1, 1, 2))
            p = p.compose(_elementary(dim, r, c, value))
            p_inv = _elementary(dim, r, c, -value).compose(p_inv)
        return p, p_inv

    def associative_algebra(self, max_dim: Optional[int] = None) -> AssociativeAlgebra:
        """A curated associative algebra, possibly in a scrambled basis."""
        a = self._base_associative(max_dim or self.max_dim)
        if self.rng.random() < 0.5:
            p, p_inv = self.basis_change(a.dim)
            a = AssociativeAlgebra(a.dim, a.product.transformed(p, p, p_inv))
        return a

    def dialgebra(self) -> Dialgebra:
        """Family assoc-as-dialgebra: ⊣ = ⊢ = an associative product."""
        return self.associative_algebra().as_dialgebra()

    # --- Poisson algebras ---------------------------------------------

    def poisson_algebra(self, max_dim: Optional[int] = None) -> PoissonAlgebra:
        """λ·commutator on an associative algebra, a zero-product Lie algebra, or a sum of these."""
        bound = max_dim or self.max_dim
        lie_choices = [nonabelian_lie_2]
        if bound >= 3:
            lie_choices += [heisenberg_lie, sl2_lie]
        roll = self.rng.random()
        if roll < 0.2:
            return self.rng.choice(lie_choices)()
        if roll < 0.3 and bound >= 3:
            lie = nonabelian_lie_2()
            return poisson_direct_sum(lie, commutator_poisson(self.associative_algebra(bound - 2),
                                                              self.rng.choice(BRACKET_SCALES)))
        return commutator_poisson(self.associative_algebra(bound), self.rng.choice(BRACKET_SCALES))

    # --- Poisson dialgebras -------------------------------------------

    def bimodule_map(self) -> PoissonLMObject:
        """A random Poisson-bimodule map M = P^r ⊕ K^s → P with dim M ≤ max_dim."""
        copies = self.rng.choice((1, 2)) if self.max_dim >= 2 else 1
        trivial = self.rng.choice((0, 1)) if self.max_dim >= copies + 1 else 0
        p = self.poisson_algebra(max(1, (self.max_dim - trivial) // copies))
        o, basis = bimodule_map_space(p, copies, trivial)
        f = _combination((p.dim, o.upstairs_dim), basis, [self.rng.choice(SMALL_COEFFICIENTS) for _ in basis])
        return PoissonLMObject(o.upstairs_dim, p, f, o.left_action, o.right_action, o.bracket_action)

    def bimodule_map_dialgebra(self) -> PoissonDialgebra:
        return poisson_dialgebra_from_bimodule_map(self.bimodule_map(), validate=False)

    def square_zero_derivation(self, p: PoissonAlgebra) -> LinearOperator:
        """
        A nonzero d with d² = 0 deriving both operations, or the zero operator.

        Searches combinations of a derivation-space basis with coefficients
        in {−1, 0, 1}.
        """
        basis = derivation_space(p.dim, [p.product, p.bracket])
        shape = (p.dim, p.dim)
        if not basis:
            return LinearOperator.zero(p.dim)

        if 3 ** len(basis) <= self.max_attempts:
            candidates = [c for c in itertools.product((-1, 0, 1), repeat=len(basis)) if any(c)]
            self.rng.shuffle(candidates)
        else:
            candidates = [tuple(self.rng.choice((-1, 0, 1)) for _ in basis) for _ in range(self.max_attempts)]

        for coefficients in candidates:
            d = _combination(shape, basis, coefficients)
            if not d.is_zero() and d.compose(d).is_zero():
                return LinearOperator(p.dim, d)
        logger.debug(f"No square-zero derivation found among {len(candidates)} candidates")
        return LinearOperator.zero(p.dim)

    def differential(self) -> Tuple[PoissonAlgebra, LinearOperator]:
        """Family differential: a Poisson algebra with a square-zero derivation."""
        p = self.poisson_algebra()
        return p, self.square_zero_derivation(p)

    def differential_dialgebra(self) -> PoissonDialgebra:
        p, d = self.differential()
        return poisson_dialgebra_from_differential(p.dim, p.product, p.bracket, d, validate=False)

    def averaging_operator(self, p: PoissonAlgebra) -> LinearOperator:
        """λ·id, or multiplication by a central element when that is averaging."""
        scalar = LinearOperator(p.dim, Matrix.identity(p.dim).scaled(self.rng.choice(SMALL_COEFFICIENTS)))
        center = center_of_product(p.dim, p.product)
        if center.dim == 0 or self.rng.random() < 0.5:
            return scalar
        generators = center.vectors()
        c = linear_combination(p.dim, [(self.rng.choice(SMALL_COEFFICIENTS), v) for v in generators])
        columns = [p.product.evaluate(c, basis_vector(p.dim, j)) for j in range(p.dim)]
        alpha = LinearOperator(p.dim, Matrix.from_columns(columns, p.dim))
        if check_averaging(p.dim, p.product, p.bracket, alpha).passed:
            return alpha
        return scalar

    def averaging(self) -> Tuple[PoissonAlgebra, LinearOperator]:
        """Family averaging; the resulting Poisson dialgebra is always reduced."""
        if self.rng.random() < 0.25:
            k = self.rng.randint(1, self.max_dim)
            p = PoissonAlgebra(k, pointwise_algebra(k).product, BilinearMap.square_zeros(k))
            mask = [self.rng.choice((0, 1)) for _ in range(k)]
            return p, LinearOperator(k, Matrix.from_entries(k, k, [(i, i, 1) for i in range(k) if mask[i]]))
        p = self.poisson_algebra()
        return p, self.averaging_operator(p)

    def averaging_dialgebra(self) -> PoissonDialgebra:
        p, alpha = self.averaging()
        return poisson_dialgebra_from_averaging(p.dim, p.product, p.bracket, alpha, validate=False)

    def poisson_dialgebra(self) -> PoissonDialgebra:
        """A Poisson dialgebra from any of the three operator/map families."""
        return self.rng.choice([self.bimodule_map_dialgebra, self.differential_dialgebra,
                                self.averaging_dialgebra])()
