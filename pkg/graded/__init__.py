"""
Filtered dialgebras and graded Poisson dialgebras.

This package provides:
- Finite filtrations with containment checks and the power filtration
- The associated graded dialgebra with its signed degree-0 bracket
- The degree −1 Gerstenhaber bracket on a commutative associated graded
- The degree-n graded Poisson dialgebra checker

Basic usage:
    ```python
    from constructions import t3_dialgebra
    from graded import FilteredDialgebra, associated_graded, check_graded_poisson_dialgebra

    fd = FilteredDialgebra.from_spans(t3_dialgebra(), [[], [[1, 0, 0], [0, 1, 0]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
    g = associated_graded(fd)
    assert check_graded_poisson_dialgebra(g, 0).passed
    ```
"""

from .filtration import (
    FilteredDialgebra, check_filtration, trivial_filtration, product_powers, power_filtration,
)
from .graded_structure import (
    GradedAlgebraStructure, Homogeneous, koszul, combine, check_graded_poisson_dialgebra,
    is_gr_commutative,
)
from .associated import associated_graded, gerstenhaber_from_filtered

__all__ = [
    # Filtrations
    'FilteredDialgebra',
    'check_filtration',
    'trivial_filtration',
    'product_powers',
    'power_filtration',

    # Graded structures
    'GradedAlgebraStructure',
    'Homogeneous',
    'koszul',
    'combine',
    'check_graded_poisson_dialgebra',
    'is_gr_commutative',

    # Constructions
    'associated_graded',
    'gerstenhaber_from_filtered',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Filtrations, associated graded structures and graded axiom checks"
