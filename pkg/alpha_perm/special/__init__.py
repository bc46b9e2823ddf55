"""
Fórmulas cerradas para matrices de permutación, de partición, por bloques y homogéneamente simétricas.
"""

from .closed_forms import (
    per_alpha_permutation_matrix,
    per_alpha_partition_matrix,
    per_alpha_block2,
    per_alpha_homsym,
    materialize
)

__all__ = [
    'per_alpha_permutation_matrix',
    'per_alpha_partition_matrix',
    'per_alpha_block2',
    'per_alpha_homsym',
    'materialize'
]
