"""
Two-term homotopy structures built from dialgebras and Poisson dialgebras.

This package provides:
- The associative 2-algebra D ⊕ I of a dialgebra
- The Lie 2-algebra g ⊕ Z(g) of a Leibniz algebra
- Both structures together on P ⊕ J for a Poisson dialgebra
- The 2-term homotopy Poisson algebra of a reduced Poisson dialgebra
- An exploratory report of candidate compatibility residuals

Basic usage:
    ```python
    from constructions import n2_dialgebra
    from homotopy import associative_2_algebra_from_dialgebra, check_associative_2_algebra

    t = associative_2_algebra_from_dialgebra(n2_dialgebra())
    assert t.dim1 == 1
    assert check_associative_2_algebra(t).passed
    ```
"""

from .two_term import TwoTermSpace, TwoTermAssoc, TwoTermLie, TwoTermHomotopyPoisson
from .associative_2 import (
    ASSOCIATIVE_2_AXIOMS, mu2_value, mu3_value, two_term_assoc_over,
    associative_2_algebra_from_dialgebra, check_associative_2_algebra,
)
from .lie_2 import (
    LIE_2_AXIOMS, l2_value, l3_value, two_term_lie_over, lie_2_algebra_from_leibniz, check_lie_2_algebra,
)
from .homotopy_poisson import (
    HOMOTOPY_POISSON_AXIOMS, homotopy_pair_from_poisson_dialgebra, check_reduced,
    homotopy_poisson_from_reduced, check_homotopy_poisson,
)
from .compat import CompatResidual, CompatReport, explore_compatibility

__all__ = [
    # Data
    'TwoTermSpace',
    'TwoTermAssoc',
    'TwoTermLie',
    'TwoTermHomotopyPoisson',

    # Associative 2-algebras
    'ASSOCIATIVE_2_AXIOMS',
    'mu2_value',
    'mu3_value',
    'two_term_assoc_over',
    'associative_2_algebra_from_dialgebra',
    'check_associative_2_algebra',

    # Lie 2-algebras
    'LIE_2_AXIOMS',
    'l2_value',
    'l3_value',
    'two_term_lie_over',
    'lie_2_algebra_from_leibniz',
    'check_lie_2_algebra',

    # Homotopy Poisson
    'HOMOTOPY_POISSON_AXIOMS',
    'homotopy_pair_from_poisson_dialgebra',
    'check_reduced',
    'homotopy_poisson_from_reduced',
    'check_homotopy_poisson',

    # Exploration
    'CompatResidual',
    'CompatReport',
    'explore_compatibility',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Associative 2-algebras, Lie 2-algebras and 2-term homotopy Poisson algebras"
