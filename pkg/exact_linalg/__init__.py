"""
Exact rational linear algebra.

This package provides the kernel every algebraic check rests on:
- Exact rational scalars (``fractions.Fraction``) with a canonical text form
- Immutable vectors and dense matrices
- Row reduction over QQ (sympy DomainMatrix)
- Canonical subspaces, kernels, intersections and quotient data

Basic usage:
    ```python
    from exact_linalg import Matrix, kernel, intersect, quotient_data

    m = Matrix.from_rows([[1, 1]])
    k = kernel(m)                      # span{(1, -1)}
    q = quotient_data(2, k)            # K^2 / k, dimension 1
    ```
"""

from .rational import RationalParseError, parse_rational, format_rational, to_fraction, RationalLike
from .vectors import (
    Vector, AmbientMismatchError, vector, zero_vector, basis_vector,
    add, sub, neg, scale, linear_combination, is_zero, dot,
)
from .matrix import Matrix, rref, rank, stack_rows, solve_particular
from .subspace import (
    Subspace, QuotientData, span, kernel, annihilator, intersect, intersect_all,
    subspace_sum, quotient_data,
)

__all__ = [
    # Scalars
    'RationalParseError',
    'RationalLike',
    'parse_rational',
    'format_rational',
    'to_fraction',

    # Vectors
    'Vector',
    'AmbientMismatchError',
    'vector',
    'zero_vector',
    'basis_vector',
    'add',
    'sub',
    'neg',
    'scale',
    'linear_combination',
    'is_zero',
    'dot',

    # Matrices
    'Matrix',
    'rref',
    'rank',
    'stack_rows',
    'solve_particular',

    # Subspaces
    'Subspace',
    'QuotientData',
    'span',
    'kernel',
    'annihilator',
    'intersect',
    'intersect_all',
    'subspace_sum',
    'quotient_data',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Exact rational linear algebra for structure-constant algebras"
