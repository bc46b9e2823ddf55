"""
Fórmulas cerradas del α-permanente para matrices estructuradas.

Las fórmulas son atajos: cuando la entrada queda fuera de su dominio (diagonal nula)
se lanza UnsupportedInputError y el llamador puede recurrir a ``per_alpha_def``.
"""
import math
from functools import singledispatch
from typing import Union

import numpy as np

from alpha_perm.combinatorics.numbers import falling_factorial, rencontres_c, rising_factorial
from alpha_perm.combinatorics.types import Permutation, SetPartition, cycle_count
from alpha_perm.config import settings
from alpha_perm.schemas.params import BlockSpec, HomSymSpec, parse_complex
from alpha_perm.utils.error_handling import UnsupportedInputError, check_size


def per_alpha_permutation_matrix(sigma: Permutation, alpha) -> complex:
    """per_α P_σ = α^{#σ}."""
    return parse_complex(alpha) ** cycle_count(sigma)


def per_alpha_partition_matrix(partition: SetPartition, alpha) -> complex:
    """per_α de la matriz 0/1 de π: producto de α^{↑#b} sobre los bloques."""
    alpha = parse_complex(alpha)
    result = 1 + 0j
    for size in partition.block_sizes():
        result *= rising_factorial(alpha, size)
    return result


def per_alpha_block2(spec: BlockSpec, alpha) -> complex:
    """
    α-permanente de la matriz por bloques A[n1, n2].

    Con ρ = A12·A21 / (A11·A22):

        A11^{n1} A22^{n2} α^{↑n2} sum_{j=0}^{min(n1,n2)} (α+j)^{↑(n1-j)} n1^{↓j} n2^{↓j} ρ^j / j!

    El factor (α+j)^{↑(n1-j)} es α^{↑n1}/α^{↑j} ya simplificado, finito para todo α.

    Args:
        spec (BlockSpec): Entradas y tamaños de bloque.
        alpha: Escalar α.

    Returns:
        complex: per_α A[n1, n2].

    Raises:
        UnsupportedInputError: Si A11 o A22 es 0.
    """
    if spec.a11 == 0 or spec.a22 == 0:
        raise UnsupportedInputError(
            "per_alpha_block2 requiere A11 y A22 no nulos; use per_alpha_def sobre la matriz materializada"
        )
    alpha = parse_complex(alpha)
    rho = spec.a12 * spec.a21 / (spec.a11 * spec.a22)
    n1, n2 = spec.n1, spec.n2
    total = 0j
    for j in range(min(n1, n2) + 1):
        total += (
            rising_factorial(alpha + j, n1 - j)
            * falling_factorial(n1, j)
            * falling_factorial(n2, j)
            * rho ** j
            / math.factorial(j)
        )
    return spec.a11 ** n1 * spec.a22 ** n2 * rising_factorial(alpha, n2) * total


def per_alpha_homsym(spec: HomSymSpec, alpha) -> complex:
    """
    α-permanente de la matriz homogéneamente simétrica H[a, b] de dimensión n:

        a^n sum_{k=1..n} sum_{l=0..n} c(n, k, l) α^k d^{n-l},  d = b / a

    Raises:
        UnsupportedInputError: Si a = 0.
        SizeLimitError: Si n supera settings.MAX_RENCONTRES_N.
    """
    if spec.a == 0:
        raise UnsupportedInputError(
            "per_alpha_homsym requiere a no nulo; use per_alpha_def sobre la matriz materializada"
        )
    n = spec.n
    check_size(n, settings.MAX_RENCONTRES_N, "per_alpha_homsym")
    alpha = parse_complex(alpha)
    d = spec.b / spec.a
    total = 0j
    for k in range(1, n + 1):
        for l in range(n + 1):
            count = rencontres_c(n, k, l)
            if count:
                total += count * alpha ** k * d ** (n - l)
    return spec.a ** n * total


@singledispatch
def materialize(spec: Union[BlockSpec, HomSymSpec]) -> np.ndarray:
    """Construye la matriz densa descrita por una especificación estructurada."""
    raise TypeError(f"No se puede materializar {type(spec).__name__}")


@materialize.register
def _(spec: BlockSpec) -> np.ndarray:
    top = np.hstack([np.full((spec.n1, spec.n1), spec.a11), np.full((spec.n1, spec.n2), spec.a12)])
    bottom = np.hstack([np.full((spec.n2, spec.n1), spec.a21), np.full((spec.n2, spec.n2), spec.a22)])
    return np.vstack([top, bottom]).astype(np.complex128)


@materialize.register
def _(spec: HomSymSpec) -> np.ndarray:
    matrix = np.full((spec.n, spec.n), spec.b, dtype=np.complex128)
    np.fill_diagonal(matrix, spec.a)
    return matrix
