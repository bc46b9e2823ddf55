"""
Caracteres irreducibles del grupo simétrico por la regla de Murnaghan-Nakayama.

Las formas se codifican como conjuntos beta: para λ con ℓ partes, β_i = λ_i + ℓ - i.
Quitar un gancho de borde de longitud r equivale a sustituir un b por b - r libre;
la altura del gancho es el número de elementos del conjunto estrictamente entre ambos.
"""
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np

from alpha_perm.combinatorics.enumeration import enumerate_integer_partitions
from alpha_perm.combinatorics.numbers import class_size
from alpha_perm.combinatorics.types import IntegerPartition
from alpha_perm.config import settings
from alpha_perm.utils.error_handling import DimensionMismatchError, check_size


def _beta_set(shape: IntegerPartition) -> Tuple[int, ...]:
    length = len(shape.parts)
    return tuple(part + length - 1 - i for i, part in enumerate(shape.parts))


@lru_cache(maxsize=None)
def _murnaghan_nakayama(beta: Tuple[int, ...], parts: Tuple[int, ...]) -> int:
    if not parts:
        return 1
    r, rest = parts[0], parts[1:]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        reduced = tuple(sorted((occupied - {b}) | {target}, reverse=True))
        total += (-1) ** height * _murnaghan_nakayama(reduced, rest)
    return total


def character(shape: IntegerPartition, cycle_type: IntegerPartition) -> int:
    """
    Valor del carácter irreducible χ_λ en la clase de tipo cíclico ν.

    Args:
        shape (IntegerPartition): λ, etiqueta de la representación irreducible.
        cycle_type (IntegerPartition): ν, tipo cíclico de la clase.

    Returns:
        int: χ_λ(ν).

    Raises:
        DimensionMismatchError: Si λ y ν no son particiones del mismo n.
        SizeLimitError: Si n supera settings.MAX_CHARACTER_N.
    """
    if shape.n != cycle_type.n:
        raise DimensionMismatchError(f"λ ⊢ {shape.n} y ν ⊢ {cycle_type.n} no son del mismo n")
    check_size(shape.n, settings.MAX_CHARACTER_N, "character")
    return _murnaghan_nakayama(_beta_set(shape), cycle_type.parts)


@dataclass(frozen=True)
class CharacterTable:
    """
    Tabla de caracteres de S_n: ``values[i][j] = χ_{partitions[i]}(partitions[j])``.

    Filas y columnas siguen el orden lexicográfico inverso de las particiones de n.
    """

    n: int
    partitions: Tuple[IntegerPartition, ...]
    values: Tuple[Tuple[int, ...], ...]
    class_sizes: Tuple[int, ...]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def index(self, partition: IntegerPartition) -> int:
        return self.partitions.index(partition)

    def value(self, shape: IntegerPartition, cycle_type: IntegerPartition) -> int:
        return self.values[self.index(shape)][self.index(cycle_type)]

    def inner_product(self, i: int, j: int) -> int:
        """sum_ν |C_ν| χ_i(ν) χ_j(ν); vale n! si i = j y 0 en otro caso."""
        return sum(
            size * a * b for size, a, b in zip(self.class_sizes, self.values[i], self.values[j])
        )

    def is_orthogonal(self) -> bool:
        order = math.factorial(self.n)
        size = len(self.partitions)
        return all(
            self.inner_product(i, j) == (order if i == j else 0)
            for i in range(size) for j in range(size)
        )


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    """
    Tabla de caracteres completa de S_n.

    Raises:
        SizeLimitError: Si n supera settings.MAX_CHARACTER_N.
    """
    check_size(n, settings.MAX_CHARACTER_N, "character_table")
    partitions = tuple(enumerate_integer_partitions(n))
    values = tuple(tuple(character(shape, nu) for nu in partitions) for shape in partitions)
    return CharacterTable(
        n=n,
        partitions=partitions,
        values=values,
        class_sizes=tuple(class_size(nu) for nu in partitions),
    )
