"""
Primitivas combinatorias: tipos, enumeración y conteos exactos.
"""

from .types import (
    Permutation,
    SetPartition,
    IntegerPartition,
    cycle_count,
    cycle_type,
    refines,
    refines_partition,
    restrict_blocks
)
from .enumeration import (
    enumerate_permutations,
    enumerate_set_partitions,
    enumerate_subsets,
    enumerate_integer_partitions
)
from .numbers import (
    falling_factorial,
    rising_factorial,
    stirling1,
    stirling2,
    bell,
    bell_upto,
    rencontres_c,
    derangement_g,
    rencontres_f,
    rencontres_f_recursive,
    centralizer_order,
    class_size
)

__all__ = [
    'Permutation',
    'SetPartition',
    'IntegerPartition',
    'cycle_count',
    'cycle_type',
    'refines',
    'refines_partition',
    'restrict_blocks',
    'enumerate_permutations',
    'enumerate_set_partitions',
    'enumerate_subsets',
    'enumerate_integer_partitions',
    'falling_factorial',
    'rising_factorial',
    'stirling1',
    'stirling2',
    'bell',
    'bell_upto',
    'rencontres_c',
    'derangement_g',
    'rencontres_f',
    'rencontres_f_recursive',
    'centralizer_order',
    'class_size'
]
