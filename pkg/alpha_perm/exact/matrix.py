"""
Validación y construcción de matrices cuadradas complejas.
"""
from typing import Any, Iterable

import numpy as np

from alpha_perm.combinatorics.types import Permutation, SetPartition
from alpha_perm.utils.error_handling import DimensionMismatchError, ValidationError


def as_matrix(data: Any) -> np.ndarray:
    """
    Convierte la entrada en una matriz cuadrada compleja validada.

    Args:
        data (Any): Array o secuencia de filas.

    Returns:
        np.ndarray: Copia de tipo complex128, forma (n, n) con n >= 1.

    Raises:
        ValidationError: Si la matriz no es cuadrada, está vacía o tiene entradas no finitas.
    """
    try:
        matrix = np.array(data, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise ValidationError("La matriz debe contener escalares numéricos", e)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValidationError(f"La matriz debe ser cuadrada, forma recibida {matrix.shape}")
    if matrix.shape[0] < 1:
        raise ValidationError("La matriz debe tener dimensión n >= 1")
    if not np.all(np.isfinite(matrix)):
        raise ValidationError("La matriz contiene entradas no finitas (NaN o infinito)")
    return matrix


def check_same_shape(*matrices: np.ndarray) -> None:
    shapes = {m.shape for m in matrices}
    if len(shapes) > 1:
        raise DimensionMismatchError(f"Dimensiones incompatibles: {sorted(shapes)}")


def submatrix(matrix: np.ndarray, block: Iterable[int]) -> np.ndarray:
    """M[b]: filas y columnas etiquetadas por los elementos (base 1) de b."""
    index = [i - 1 for i in block]
    return matrix[np.ix_(index, index)]


def partition_matrix(partition: SetPartition) -> np.ndarray:
    """Matriz 0/1 de π: la entrada (i, j) vale 1 si i y j están en el mismo bloque."""
    labels = np.array(partition.block_of())
    return (labels[:, None] == labels[None, :]).astype(np.complex128)


def permutation_matrix(sigma: Permutation) -> np.ndarray:
    """P_σ con entrada (i, σ(i)) igual a 1."""
    result = np.zeros((sigma.n, sigma.n), dtype=np.complex128)
    for i in range(1, sigma.n + 1):
        result[i - 1, sigma(i) - 1] = 1
    return result


def mask(matrix: np.ndarray, partition: SetPartition) -> np.ndarray:
    """
    Proyección diagonal por bloques M·π (producto de Hadamard con la matriz de π).

    Raises:
        DimensionMismatchError: Si π no particiona {1..n}.
    """
    matrix = as_matrix(matrix)
    if partition.n != matrix.shape[0]:
        raise DimensionMismatchError(
            f"Partición de tamaño {partition.n} para una matriz {matrix.shape[0]}x{matrix.shape[0]}"
        )
    return matrix * partition_matrix(partition)
