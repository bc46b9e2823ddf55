"""
Caracteres del grupo simétrico, inmanantes y desarrollo del α-permanente en inmanantes.
"""

from .characters import (
    character,
    CharacterTable,
    character_table
)
from .expansion import (
    CoefficientVector,
    immanant,
    c_lambda,
    coefficient_system,
    solve_coefficients,
    per_via_immanants,
    per_immanant_decomposition_rhs,
    mobius_identity_check
)

__all__ = [
    'character',
    'CharacterTable',
    'character_table',
    'CoefficientVector',
    'immanant',
    'c_lambda',
    'coefficient_system',
    'solve_coefficients',
    'per_via_immanants',
    'per_immanant_decomposition_rhs',
    'mobius_identity_check'
]
