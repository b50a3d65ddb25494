"""
Functors and example factories between the algebra flavors.

This package provides:
- Induced Leibniz brackets and Poisson dialgebras of dialgebras
- Associativization and Poissonization quotients
- The bar ideal I, the right center Z and J = I ∩ Z
- Algebra objects in the category of linear maps and the adjunction checks
- Poisson dialgebras from bimodule maps, differentials and averaging operators
- Named fixtures and seeded instance families

Basic usage:
    ```python
    from constructions import n2_dialgebra, associativization, ideal_I

    algebra, q = associativization(n2_dialgebra())
    assert algebra.dim == 1 and algebra.product.is_zero()
    assert ideal_I(n2_dialgebra()).dim == 1
    ```
"""

from .fixtures import (
    n2_dialgebra, t3_algebra, t3_dialgebra, zero_algebra, truncated_polynomial, pointwise_algebra,
    upper_triangular, matrix_algebra, direct_sum, block_sum, commutator_bracket, commutator_poisson,
    nonabelian_lie_2, heisenberg_lie, sl2_lie, poisson_direct_sum, k2_pointwise_poisson,
    first_coordinate_projection, truncated_derivation, scalar_operator,
)
from .induced import require_dialgebra, require_poisson_dialgebra, induced_leibniz, induced_poisson_dialgebra
from .ideals import ideal_I, right_center, annihilator_J, center_of_product, find_two_sided_unit
from .quotients import bar_differences, associativization, poissonization
from .lm_objects import (
    LMObject, PoissonLMObject, check_lm_object, check_poisson_lm_object, dialgebra_from_lm_object,
    lm_object_from_dialgebra, poisson_dialgebra_from_bimodule_map,
    poisson_dialgebra_from_poisson_lm_object, poisson_lm_object_from_poisson_dialgebra,
)
from .adjunction import (
    FACTORIZATION_AXIOMS, factor_through_quotient, check_adjoint_factorization, check_poisson_adjoint_factorization,
)
from .operators import (
    check_derivation, poisson_dialgebra_from_differential, check_averaging,
    poisson_dialgebra_from_averaging,
)
from .families import InstanceGenerator, derivation_space, bimodule_map_space

__all__ = [
    # Fixtures
    'n2_dialgebra',
    't3_algebra',
    't3_dialgebra',
    'zero_algebra',
    'truncated_polynomial',
    'pointwise_algebra',
    'upper_triangular',
    'matrix_algebra',
    'direct_sum',
    'block_sum',
    'commutator_bracket',
    'commutator_poisson',
    'nonabelian_lie_2',
    'heisenberg_lie',
    'sl2_lie',
    'poisson_direct_sum',
    'k2_pointwise_poisson',
    'first_coordinate_projection',
    'truncated_derivation',
    'scalar_operator',

    # Induced structures
    'require_dialgebra',
    'require_poisson_dialgebra',
    'induced_leibniz',
    'induced_poisson_dialgebra',

    # Subspaces and quotients
    'ideal_I',
    'right_center',
    'annihilator_J',
    'center_of_product',
    'find_two_sided_unit',
    'bar_differences',
    'associativization',
    'poissonization',

    # Linear-map objects and adjunctions
    'LMObject',
    'PoissonLMObject',
    'check_lm_object',
    'check_poisson_lm_object',
    'dialgebra_from_lm_object',
    'lm_object_from_dialgebra',
    'poisson_dialgebra_from_bimodule_map',
    'poisson_dialgebra_from_poisson_lm_object',
    'poisson_lm_object_from_poisson_dialgebra',
    'FACTORIZATION_AXIOMS',
    'factor_through_quotient',
    'check_adjoint_factorization',
    'check_poisson_adjoint_factorization',

    # Operator constructions
    'check_derivation',
    'poisson_dialgebra_from_differential',
    'check_averaging',
    'poisson_dialgebra_from_averaging',

    # Generation
    'InstanceGenerator',
    'derivation_space',
    'bimodule_map_space',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Functors, ideals, quotients and instance families for Poisson dialgebras"
