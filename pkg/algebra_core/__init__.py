"""
Structure-constant algebras and exhaustive axiom checkers.

This package provides:
- Bilinear and trilinear structure tensors and linear operators
- Associative algebras, dialgebras, Leibniz algebras, Poisson algebras and
  Poisson dialgebras
- Axiom checkers returning deterministic AxiomReports
- Bimodule representations and their placement-wise checks

Basic usage:
    ```python
    from algebra_core import BilinearMap, Dialgebra, check_dialgebra

    left = BilinearMap.from_entries((2, 2, 2), [(0, 0, 1, 1)])   # x⊣x = y
    n2 = Dialgebra(2, left, BilinearMap.square_zeros(2))
    report = check_dialgebra(n2)
    assert report.passed
    ```
"""

from .errors import ShapeMismatchError, InvalidStructureError, GuardFailure
from .multilinear import BilinearMap, TrilinearMap, LinearOperator, evaluate
from .structures import (
    StructureKind, AssociativeAlgebra, Dialgebra, LeibnizAlgebra, PoissonAlgebra, PoissonDialgebra,
)
from .reports import Violation, AxiomReport, ReportBuilder, merge_reports
from .identities import Identity, Operations, Elem, DIALGEBRA_IDENTITIES, COMPATIBILITY_IDENTITIES
from .checkers import (
    FORMULATION_DEFECT,
    check_associative, check_dialgebra, check_dialgebra_alternative, check_leibniz,
    check_lie_algebra, check_poisson_algebra, check_poisson_dialgebra, check_homomorphism,
    check_linear_map_shape, structure_maps,
)
from .bimodules import (
    DialgebraBimodule, PoissonDialgebraBimodule, AssociativeBimodule, PoissonBimodule,
    regular_dialgebra_bimodule, regular_poisson_dialgebra_bimodule,
    regular_associative_bimodule, regular_poisson_bimodule,
    check_dialgebra_bimodule, check_poisson_dialgebra_bimodule,
    check_associative_bimodule, check_poisson_bimodule,
)

__all__ = [
    # Errors
    'ShapeMismatchError',
    'InvalidStructureError',
    'GuardFailure',

    # Tensors
    'BilinearMap',
    'TrilinearMap',
    'LinearOperator',
    'evaluate',

    # Structures
    'StructureKind',
    'AssociativeAlgebra',
    'Dialgebra',
    'LeibnizAlgebra',
    'PoissonAlgebra',
    'PoissonDialgebra',

    # Reports and identities
    'Violation',
    'AxiomReport',
    'ReportBuilder',
    'merge_reports',
    'Identity',
    'Operations',
    'Elem',
    'DIALGEBRA_IDENTITIES',
    'COMPATIBILITY_IDENTITIES',
    'FORMULATION_DEFECT',

    # Checkers
    'check_associative',
    'check_dialgebra',
    'check_dialgebra_alternative',
    'check_leibniz',
    'check_lie_algebra',
    'check_poisson_algebra',
    'check_poisson_dialgebra',
    'check_homomorphism',
    'check_linear_map_shape',
    'structure_maps',

    # Bimodules
    'DialgebraBimodule',
    'PoissonDialgebraBimodule',
    'AssociativeBimodule',
    'PoissonBimodule',
    'regular_dialgebra_bimodule',
    'regular_poisson_dialgebra_bimodule',
    'regular_associative_bimodule',
    'regular_poisson_bimodule',
    'check_dialgebra_bimodule',
    'check_poisson_dialgebra_bimodule',
    'check_associative_bimodule',
    'check_poisson_bimodule',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Structure-constant algebras with exhaustive axiom checking"
