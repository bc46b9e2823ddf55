"""
Generadores aleatorios reproducibles de matrices, permutaciones y particiones.

Todas las funciones reciben un ``numpy.random.Generator``; ``make_rng`` construye uno
con el generador basado en contador Philox a partir de una semilla y claves de flujo.
"""
from typing import Tuple

import numpy as np

from alpha_perm.combinatorics.types import Permutation, SetPartition


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """
    Generador Philox para el flujo (seed, *keys).

    Flujos con claves distintas son independientes; la misma tupla reproduce la misma secuencia.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *keys])))


def random_complex_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """Matriz n x n con entradas gaussianas complejas estándar."""
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def random_psd_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """Matriz de Gram Z Zᵀ de un factor gaussiano real cuadrado (simétrica semidefinida positiva)."""
    factor = rng.standard_normal((n, n))
    return factor @ factor.T


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation(tuple(int(x) + 1 for x in rng.permutation(n)))


def random_set_partition(n: int, rng: np.random.Generator) -> SetPartition:
    """Partición obtenida etiquetando cada elemento con un bloque uniforme entre n."""
    labels = rng.integers(0, n, size=n)
    blocks = {}
    for element, label in enumerate(labels.tolist(), start=1):
        blocks.setdefault(label, []).append(element)
    return SetPartition(tuple(tuple(b) for b in blocks.values()))


def random_scalar(rng: np.random.Generator, complex_valued: bool = True) -> complex:
    """Escalar gaussiano; complejo por defecto."""
    re, im = rng.standard_normal(2)
    return complex(re, im) if complex_valued else complex(re)


def random_block_sizes(n: int, rng: np.random.Generator) -> Tuple[int, int]:
    """Par (n1, n2) con n1 + n2 = n y ambos >= 1."""
    n1 = int(rng.integers(1, n))
    return n1, n - n1
