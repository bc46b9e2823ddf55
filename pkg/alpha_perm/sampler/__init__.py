"""
Muestreo de particiones Pitman-Ewens y estimadores de importancia del α-permanente.
"""

from .pitman_ewens import (
    default_proposal,
    pe_sample,
    pe_prob
)
from .importance import (
    partition_weights,
    is_estimate_partitions,
    is_estimate_permutations_uniform
)

__all__ = [
    'default_proposal',
    'pe_sample',
    'pe_prob',
    'partition_weights',
    'is_estimate_partitions',
    'is_estimate_permutations_uniform'
]
