"""
Motores exactos del α-permanente y evaluadores de identidades.
"""

from .matrix import (
    as_matrix,
    submatrix,
    mask,
    partition_matrix,
    permutation_matrix
)
from .engines import (
    cycle_count_polynomial,
    cycle_type_sums,
    per_alpha_def,
    per_alpha_cofactor,
    det,
    per_alpha_masked,
    compute_alpha_permanent
)
from .identities import (
    rhs_decomposition,
    det_decomposition,
    per_alpha_via_det,
    per_via_determinants,
    rhs_det_expansion,
    rhs_infinite_divisibility,
    rhs_sum_identity,
    per_alpha_plus_identity,
    det_sum_identity_rhs,
    rhs_product_identity
)

__all__ = [
    'as_matrix',
    'submatrix',
    'mask',
    'partition_matrix',
    'permutation_matrix',
    'cycle_count_polynomial',
    'cycle_type_sums',
    'per_alpha_def',
    'per_alpha_cofactor',
    'det',
    'per_alpha_masked',
    'compute_alpha_permanent',
    'rhs_decomposition',
    'det_decomposition',
    'per_alpha_via_det',
    'per_via_determinants',
    'rhs_det_expansion',
    'rhs_infinite_divisibility',
    'rhs_sum_identity',
    'per_alpha_plus_identity',
    'det_sum_identity_rhs',
    'rhs_product_identity'
]
