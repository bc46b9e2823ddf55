"""
Enumeración determinista de permutaciones, particiones de conjuntos, subconjuntos
y particiones enteras.

Los límites de tamaño son errores explícitos (SizeLimitError), nunca truncamientos.
"""
import itertools
from typing import Iterator, List, Optional, Tuple

from alpha_perm.combinatorics.types import IntegerPartition, Permutation, SetPartition
from alpha_perm.config import settings
from alpha_perm.utils.error_handling import ValidationError, check_size


def _check_positive(n: int, operation: str) -> None:
    if n < 1:
        raise ValidationError(f"{operation}: n debe ser >= 1, se recibió {n}")


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """
    Genera las n! permutaciones de {1..n} en orden lexicográfico de la notación de una línea.

    Args:
        n (int): Tamaño del conjunto base.

    Yields:
        Permutation: Cada permutación exactamente una vez.

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    _check_positive(n, "enumerate_permutations")
    check_size(n, settings.MAX_PERMUTATION_N, "enumerate_permutations")
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation(images)


def _restricted_growth_strings(n: int, max_blocks: int) -> Iterator[Tuple[int, ...]]:
    rgs = [0] * n

    def extend(position: int, blocks: int) -> Iterator[Tuple[int, ...]]:
        if position == n:
            yield tuple(rgs)
            return
        # Etiquetas 0..blocks-1 reutilizan un bloque; la etiqueta `blocks` abre uno nuevo
        for label in range(min(blocks + 1, max_blocks)):
            rgs[position] = label
            yield from extend(position + 1, max(blocks, label + 1))

    yield from extend(1, 1)


def enumerate_set_partitions(n: int, max_blocks: Optional[int] = None) -> Iterator[SetPartition]:
    """
    Genera las particiones de {1..n} en orden lexicográfico de cadenas de crecimiento restringido.

    Args:
        n (int): Tamaño del conjunto base.
        max_blocks (Optional[int]): Si se indica, solo particiones con a lo sumo ese número de bloques.

    Yields:
        SetPartition: Cada partición exactamente una vez (B(n) o B(n, <=k) en total).

    Raises:
        ValidationError: Si n < 1 o max_blocks < 1.
        SizeLimitError: Si n supera settings.MAX_PARTITION_N.
    """
    _check_positive(n, "enumerate_set_partitions")
    check_size(n, settings.MAX_PARTITION_N, "enumerate_set_partitions")
    if max_blocks is not None and max_blocks < 1:
        raise ValidationError(f"max_blocks debe ser >= 1, se recibió {max_blocks}")
    limit = n if max_blocks is None else min(max_blocks, n)
    for rgs in _restricted_growth_strings(n, limit):
        yield SetPartition.from_rgs(rgs)


def enumerate_subsets(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Genera los 2^n subconjuntos de {1..n} siguiendo un contador binario ascendente.

    El bit i-ésimo de la máscara corresponde al elemento i+1; el primero es el vacío.
    """
    if n < 0:
        raise ValidationError(f"enumerate_subsets: n debe ser >= 0, se recibió {n}")
    for mask in range(1 << n):
        yield tuple(i + 1 for i in range(n) if mask >> i & 1)


def enumerate_integer_partitions(n: int) -> List[IntegerPartition]:
    """
    Particiones enteras de n en orden lexicográfico inverso: (n), (n-1,1), ..., (1^n).
    """
    _check_positive(n, "enumerate_integer_partitions")
    result: List[IntegerPartition] = []

    def extend(remaining: int, largest: int, prefix: List[int]) -> None:
        if remaining == 0:
            result.append(IntegerPartition(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            extend(remaining - part, part, prefix)
            prefix.pop()

    extend(n, n, [])
    return result
