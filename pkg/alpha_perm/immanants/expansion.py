"""
Inmanantes y desarrollo del α-permanente en la base de inmanantes.

Con c_λ(α) = (1/n!) sum_σ α^{#σ} χ_λ(σ) se cumple sum_λ c_λ(α) χ_λ(σ) = α^{#σ},
y por tanto per_α M = sum_λ c_λ(α) Im_λ M.
"""
import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

import numpy as np

from alpha_perm.combinatorics.enumeration import enumerate_set_partitions
from alpha_perm.combinatorics.numbers import falling_factorial
from alpha_perm.combinatorics.types import IntegerPartition, SetPartition, refines_partition, restrict_blocks
from alpha_perm.config import settings
from alpha_perm.exact.engines import cycle_type_sums, det, per_alpha_masked
from alpha_perm.exact.matrix import as_matrix, mask
from alpha_perm.immanants.characters import CharacterTable, character_table
from alpha_perm.schemas.params import parse_complex
from alpha_perm.utils.error_handling import DimensionMismatchError, ValidationError, check_size
from alpha_perm.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CoefficientVector:
    """Coeficientes c_λ(α) en el orden de ``partitions``."""

    alpha: complex
    partitions: Tuple[IntegerPartition, ...]
    values: Tuple[complex, ...]

    def __getitem__(self, shape: IntegerPartition) -> complex:
        return self.values[self.partitions.index(shape)]

    def as_dict(self) -> Dict[IntegerPartition, complex]:
        return dict(zip(self.partitions, self.values))


def _immanant_from_sums(
    table: CharacterTable,
    shape: IntegerPartition,
    sums: Dict[IntegerPartition, complex]
) -> complex:
    row = table.values[table.index(shape)]
    return sum((row[table.index(nu)] * value for nu, value in sums.items()), 0j)


def immanant(matrix, shape: IntegerPartition) -> complex:
    """
    Inmanante Im_λ M = sum_σ χ_λ(σ) prod_i M_{i,σ(i)}.

    Im_{(n)} es el permanente e Im_{1^n} el determinante.

    Raises:
        DimensionMismatchError: Si λ no es partición de n.
        SizeLimitError: Si n supera settings.MAX_IMMANANT_N.
    """
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    if shape.n != n:
        raise DimensionMismatchError(f"λ ⊢ {shape.n} para una matriz {n}x{n}")
    check_size(n, settings.MAX_IMMANANT_N, "immanant")
    return _immanant_from_sums(character_table(n), shape, cycle_type_sums(matrix))


def c_lambda(alpha, shape: IntegerPartition) -> complex:
    """
    c_λ(α) = (1/n!) sum_ν |C_ν| α^{#ν} χ_λ(ν).

    Raises:
        SizeLimitError: Si n supera settings.MAX_IMMANANT_N.
    """
    n = shape.n
    check_size(n, settings.MAX_IMMANANT_N, "c_lambda")
    alpha = parse_complex(alpha)
    table = character_table(n)
    row = table.values[table.index(shape)]
    total = sum(
        (size * alpha ** nu.length * chi
         for nu, size, chi in zip(table.partitions, table.class_sizes, row)),
        0j,
    )
    return total / math.factorial(n)


def coefficient_system(n: int) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Matriz de caracteres X, su matriz de cofactores con signo Y y det X.

    Y_{ij} = (-1)^{i+j} det X^{(i,j)}, de modo que Y Xᵀ = det(X) I.

    Raises:
        SizeLimitError: Si n supera settings.MAX_COEFFICIENT_SOLVE_N.
    """
    check_size(n, settings.MAX_COEFFICIENT_SOLVE_N, "coefficient_system")
    x = character_table(n).as_array()
    size = x.shape[0]
    y = np.empty_like(x)
    for i in range(size):
        for j in range(size):
            minor = np.delete(np.delete(x, i, axis=0), j, axis=1)
            y[i, j] = (-1) ** (i + j) * det(minor).real
    return x, y, det(x).real


def solve_coefficients(alpha, n: int) -> CoefficientVector:
    """
    Resuelve A = Xᵀ c con A_ν = α^{#ν} mediante c = Y A / det X.

    Raises:
        SizeLimitError: Si n supera settings.MAX_COEFFICIENT_SOLVE_N.
    """
    alpha = parse_complex(alpha)
    x, y, det_x = coefficient_system(n)
    partitions = character_table(n).partitions
    target = np.array([alpha ** nu.length for nu in partitions], dtype=np.complex128)
    c = y @ target / det_x
    logger.debug("Coeficientes resueltos", n=n, det_x=det_x)
    return CoefficientVector(alpha=alpha, partitions=partitions, values=tuple(complex(v) for v in c))


def per_via_immanants(matrix, alpha) -> complex:
    """
    per_α M = sum_λ c_λ(α) Im_λ M.

    Raises:
        SizeLimitError: Si n supera settings.MAX_IMMANANT_EXPANSION_N.
    """
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    check_size(n, settings.MAX_IMMANANT_EXPANSION_N, "per_via_immanants")
    table = character_table(n)
    sums = cycle_type_sums(matrix)
    return sum(
        (c_lambda(alpha, shape) * _immanant_from_sums(table, shape, sums) for shape in table.partitions),
        0j,
    )


def per_immanant_decomposition_rhs(matrix, alpha, beta) -> complex:
    """
    sum_λ c_λ(-β) sum_π (-α/β)^{↓#π} Im_λ(M·π), que coincide con per_α M.

    Raises:
        ValidationError: Si β = 0.
        SizeLimitError: Si n supera settings.MAX_MOBIUS_N.
    """
    alpha, beta = parse_complex(alpha), parse_complex(beta)
    if beta == 0:
        raise ValidationError("per_immanant_decomposition_rhs requiere beta distinto de 0")
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    check_size(n, settings.MAX_MOBIUS_N, "per_immanant_decomposition_rhs")
    table = character_table(n)
    coefficients = [c_lambda(-beta, shape) for shape in table.partitions]
    ratio = -alpha / beta

    total = 0j
    for partition in enumerate_set_partitions(n):
        weight = falling_factorial(ratio, partition.size)
        if weight == 0:
            continue
        sums = cycle_type_sums(mask(matrix, partition))
        total += weight * sum(
            (c * _immanant_from_sums(table, shape, sums)
             for c, shape in zip(coefficients, table.partitions)),
            0j,
        )
    return total


def _full_cycle_sum(matrix: np.ndarray, block: Iterable[int]) -> complex:
    """Suma de prod M_{j,σ(j)} sobre las permutaciones de b formadas por un único ciclo."""
    first, *rest = [i - 1 for i in block]
    if not rest:
        return complex(matrix[first, first])
    total = 0j
    for order in itertools.permutations(rest):
        path = (first, *order, first)
        product = 1 + 0j
        for i, j in zip(path, path[1:]):
            product *= matrix[i, j]
        total += product
    return total


def mobius_identity_check(matrix, beta, partition: SetPartition) -> Tuple[complex, complex]:
    """
    Evalúa por separado los dos lados de la inversión de Möbius sobre el retículo de particiones.

    Lado izquierdo: [sum_{σ∼π} prod M_{j,σ(j)}] · sum_ν c_ν(β) χ_ν(π), donde σ∼π significa
    que los ciclos de σ son exactamente los bloques de π.
    Lado derecho: sum_{π' <= π} per_β(M·π') prod_{b ∈ π} (-1)^{k_b - 1} (k_b - 1)!,
    con k_b el número de bloques de π' contenidos en b.

    Returns:
        Tuple[complex, complex]: (lado izquierdo, lado derecho).

    Raises:
        DimensionMismatchError: Si π no particiona {1..n}.
        SizeLimitError: Si n supera settings.MAX_MOBIUS_N.
    """
    matrix = as_matrix(matrix)
    beta = parse_complex(beta)
    n = matrix.shape[0]
    if partition.n != n:
        raise DimensionMismatchError(f"Partición de tamaño {partition.n} para una matriz {n}x{n}")
    check_size(n, settings.MAX_MOBIUS_N, "mobius_identity_check")

    table = character_table(n)
    cycle_class = partition.shape()
    class_value = sum(
        (c_lambda(beta, shape) * table.value(shape, cycle_class) for shape in table.partitions),
        0j,
    )
    cycles = 1 + 0j
    for block in partition.blocks:
        cycles *= _full_cycle_sum(matrix, block)
    lhs = cycles * class_value

    rhs = 0j
    for finer in enumerate_set_partitions(n):
        if not refines_partition(finer, partition):
            continue
        mobius = 1
        for block in partition.blocks:
            k = restrict_blocks(finer, block)
            mobius *= (-1) ** (k - 1) * math.factorial(k - 1)
        rhs += per_alpha_masked(matrix, finer, beta) * mobius
    return lhs, rhs
