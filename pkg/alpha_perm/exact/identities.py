"""
Evaluadores de los dos lados de las identidades de descomposición del α-permanente.

Todas las sumas sobre particiones reutilizan, dentro de una misma llamada, el valor
calculado para cada bloque: per_α(M·π) y det(M·π) factorizan sobre los bloques de π.
"""
import itertools
import logging
from typing import Callable, Dict, Tuple

import numpy as np

from alpha_perm.combinatorics.enumeration import enumerate_set_partitions, enumerate_subsets
from alpha_perm.combinatorics.numbers import falling_factorial
from alpha_perm.combinatorics.types import SetPartition
from alpha_perm.config import settings
from alpha_perm.exact.engines import det, per_alpha_def
from alpha_perm.exact.matrix import as_matrix, check_same_shape, submatrix
from alpha_perm.schemas.params import parse_complex
from alpha_perm.utils.error_handling import ValidationError, check_size
from alpha_perm.utils.numerics import as_negative_integer

logger = logging.getLogger(__name__)


class _BlockCache:
    """Valor por bloque memoizado durante una suma sobre particiones."""

    def __init__(self, matrix: np.ndarray, block_value: Callable[[np.ndarray], complex]):
        self.matrix = matrix
        self.block_value = block_value
        self._values: Dict[Tuple[int, ...], complex] = {}

    def __call__(self, partition: SetPartition) -> complex:
        result = 1 + 0j
        for block in partition.blocks:
            value = self._values.get(block)
            if value is None:
                value = self.block_value(submatrix(self.matrix, block))
                self._values[block] = value
            result *= value
            if result == 0:
                break
        return result


def _weighted_partition_sum(
    matrix: np.ndarray,
    weight: complex,
    block_value: Callable[[np.ndarray], complex],
    max_blocks=None
) -> Tuple[complex, int]:
    """sum_π weight^{↓#π} · prod_b block_value(M[b]); devuelve también el número de términos."""
    blocks = _BlockCache(matrix, block_value)
    total = 0j
    terms = 0
    for partition in enumerate_set_partitions(matrix.shape[0], max_blocks):
        terms += 1
        coefficient = falling_factorial(weight, partition.size)
        if coefficient == 0:
            continue
        total += coefficient * blocks(partition)
    return total, terms


def rhs_decomposition(matrix, alpha, beta) -> complex:
    """
    Lado derecho de la descomposición por particiones:

        per_{αβ} M = sum_π β^{↓#π} per_α(M·π)

    Args:
        matrix: Matriz cuadrada compleja.
        alpha: Escalar α.
        beta: Escalar β.

    Returns:
        complex: La suma sobre todas las particiones de [n].

    Raises:
        SizeLimitError: Si n supera settings.MAX_FULL_PARTITION_SUM_N.
    """
    matrix = as_matrix(matrix)
    check_size(matrix.shape[0], settings.MAX_FULL_PARTITION_SUM_N, "rhs_decomposition")
    alpha = parse_complex(alpha)
    total, _ = _weighted_partition_sum(
        matrix, parse_complex(beta), lambda block: per_alpha_def(block, alpha)
    )
    return total


def det_decomposition(matrix, beta) -> Tuple[complex, int]:
    """
    per_β M = (-1)^n sum_π (-β)^{↓#π} det(M·π), junto con el número de particiones visitadas.

    Si β = -k con k entero positivo, solo se enumeran las particiones con a lo sumo k
    bloques (los pesos k^{↓#π} se anulan a partir de k + 1 bloques).

    Raises:
        SizeLimitError: n > settings.MAX_PARTITION_N en la rama truncada o
            n > settings.MAX_FULL_PARTITION_SUM_N en la rama general.
    """
    matrix = as_matrix(matrix)
    beta = parse_complex(beta)
    n = matrix.shape[0]
    k = as_negative_integer(beta)
    if k is not None:
        check_size(n, settings.MAX_PARTITION_N, "per_alpha_via_det")
        logger.debug(f"Suma truncada a particiones con a lo sumo {k} bloques (n={n})")
        total, terms = _weighted_partition_sum(matrix, k, det, max_blocks=k)
    else:
        check_size(n, settings.MAX_FULL_PARTITION_SUM_N, "per_alpha_via_det")
        total, terms = _weighted_partition_sum(matrix, -beta, det)
    return (-1) ** n * total, terms


def per_alpha_via_det(matrix, beta) -> complex:
    """
    β-permanente como combinación lineal de determinantes de proyecciones por bloques:

        per_β M = (-1)^n sum_π (-β)^{↓#π} det(M·π)

    Con β = -1 queda (-1)^n det M.
    """
    value, _ = det_decomposition(matrix, beta)
    return value


def per_via_determinants(matrix) -> complex:
    """Permanente como suma de determinantes: (-1)^n sum_π (-1)^{↓#π} det(M·π)."""
    return per_alpha_via_det(matrix, 1)


def rhs_det_expansion(matrix, alpha) -> complex:
    """
    sum_π (-1/α)^{↓#π} per_α(M·π), que coincide con (-1)^n det M.

    Raises:
        ValidationError: Si α = 0.
        SizeLimitError: Si n supera settings.MAX_FULL_PARTITION_SUM_N.
    """
    alpha = parse_complex(alpha)
    if alpha == 0:
        raise ValidationError("rhs_det_expansion requiere alpha distinto de 0")
    return rhs_decomposition(matrix, alpha, -1 / alpha)


def rhs_infinite_divisibility(matrix, alpha, k: int) -> complex:
    """
    sum_{π con <= k bloques} k^{↓#π} per_α(M·π), que coincide con per_{kα} M.

    Raises:
        ValidationError: Si k < 1.
        SizeLimitError: Si n supera settings.MAX_FULL_PARTITION_SUM_N.
    """
    if k < 1:
        raise ValidationError(f"k debe ser un entero >= 1, se recibió {k}")
    matrix = as_matrix(matrix)
    check_size(matrix.shape[0], settings.MAX_FULL_PARTITION_SUM_N, "rhs_infinite_divisibility")
    alpha = parse_complex(alpha)
    total, _ = _weighted_partition_sum(
        matrix, k, lambda block: per_alpha_def(block, alpha), max_blocks=k
    )
    return total


def rhs_sum_identity(a, b, alpha) -> complex:
    """
    sum_{s ⊆ [n]} per_α(A·I_s + B·I_{s^c}): la fila i se toma de A si i ∈ s y de B si no.
    Coincide con per_α(A + B).

    Raises:
        DimensionMismatchError: Si A y B tienen dimensiones distintas.
        SizeLimitError: Si n supera settings.MAX_FULL_PARTITION_SUM_N.
    """
    a, b = as_matrix(a), as_matrix(b)
    check_same_shape(a, b)
    n = a.shape[0]
    check_size(n, settings.MAX_FULL_PARTITION_SUM_N, "rhs_sum_identity")
    alpha = parse_complex(alpha)
    total = 0j
    for subset in enumerate_subsets(n):
        rows = np.isin(np.arange(1, n + 1), subset)
        mixed = np.where(rows[:, None], a, b)
        total += per_alpha_def(mixed, alpha)
    return total


def per_alpha_plus_identity(a, alpha) -> complex:
    """
    sum_{s ⊆ [n]} α^{n-#s} per_α A[s], con per_α A[∅] = 1. Coincide con per_α(A + I_n).

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    a = as_matrix(a)
    n = a.shape[0]
    check_size(n, settings.MAX_PERMUTATION_N, "per_alpha_plus_identity")
    alpha = parse_complex(alpha)
    total = 0j
    for subset in enumerate_subsets(n):
        value = per_alpha_def(submatrix(a, subset), alpha) if subset else 1
        total += alpha ** (n - len(subset)) * value
    return total


def det_sum_identity_rhs(a) -> complex:
    """sum_{s ⊆ [n]} det A[s] (det A[∅] = 1), que coincide con det(A + I_n)."""
    a = as_matrix(a)
    check_size(a.shape[0], settings.MAX_PERMUTATION_N, "det_sum_identity_rhs")
    return sum((det(submatrix(a, subset)) for subset in enumerate_subsets(a.shape[0])), 0j)


def rhs_product_identity(a, b, alpha) -> complex:
    """
    sum_{x ∈ [n]^n} per_α(B_x) prod_j A_{j,x_j}, donde la fila j de B_x es la fila x_j de B.
    Coincide con per_α(A·B).

    Raises:
        DimensionMismatchError: Si A y B tienen dimensiones distintas.
        SizeLimitError: Si n supera settings.MAX_PRODUCT_IDENTITY_N.
    """
    a, b = as_matrix(a), as_matrix(b)
    check_same_shape(a, b)
    n = a.shape[0]
    check_size(n, settings.MAX_PRODUCT_IDENTITY_N, "rhs_product_identity")
    alpha = parse_complex(alpha)
    total = 0j
    for x in itertools.product(range(n), repeat=n):
        weight = complex(np.prod(a[np.arange(n), x]))
        if weight == 0:
            continue
        total += weight * per_alpha_def(b[list(x)], alpha)
    return total
