"""
Tipos combinatorios del dominio: permutaciones, particiones de conjuntos y particiones enteras.

Todos los tipos son inmutables y comparables por valor. Los elementos se etiquetan 1..n.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from alpha_perm.utils.error_handling import DimensionMismatchError, ValidationError


@dataclass(frozen=True)
class Permutation:
    """
    Biyección de {1..n} en notación de una línea: ``images[i-1] = σ(i)``.
    """

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"No es una permutación de 1..{len(images)}: {images}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> 'Permutation':
        """
        Construye una permutación a partir de sus ciclos (los puntos omitidos quedan fijos).

        Args:
            n (int): Tamaño del conjunto base.
            cycles (Iterable[Sequence[int]]): Ciclos, p. ej. [(1, 2, 3), (4, 5)].

        Returns:
            Permutation: La permutación resultante.
        """
        images = list(range(1, n + 1))
        for cycle in cycles:
            for position, element in enumerate(cycle):
                images[element - 1] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycles(self) -> List[Tuple[int, ...]]:
        """
        Ciclos de la permutación, cada uno empezando por su menor elemento, ordenados por ese elemento.
        """
        seen = [False] * self.n
        result = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = []
            current = start
            while not seen[current - 1]:
                seen[current - 1] = True
                cycle.append(current)
                current = self.images[current - 1]
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> 'IntegerPartition':
        return IntegerPartition(tuple(sorted((len(c) for c in self.cycles()), reverse=True)))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1


@dataclass(frozen=True)
class SetPartition:
    """
    Partición de {1..n} en bloques disjuntos no vacíos.

    Forma canónica: bloques ordenados por su menor elemento y elementos ascendentes
    dentro de cada bloque; el constructor la impone, de modo que igualdad y hash
    no dependen del orden en que se den los bloques.
    """

    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted((tuple(sorted(int(x) for x in b)) for b in self.blocks),
                              key=lambda b: b[0] if b else 0))
        elements = [x for b in blocks for x in b]
        if any(len(b) == 0 for b in blocks):
            raise ValidationError(f"Bloque vacío en la partición {blocks}")
        if sorted(elements) != list(range(1, len(elements) + 1)):
            raise ValidationError(f"Los bloques no particionan 1..{len(elements)}: {blocks}")
        object.__setattr__(self, 'blocks', blocks)

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> 'SetPartition':
        """
        Construye la partición a partir de una cadena de crecimiento restringido (base 0).

        Args:
            rgs (Sequence[int]): ``rgs[i]`` es el índice de bloque del elemento i+1.

        Returns:
            SetPartition: La partición correspondiente.
        """
        blocks: List[List[int]] = []
        for element, label in enumerate(rgs, start=1):
            if label == len(blocks):
                blocks.append([element])
            elif 0 <= label < len(blocks):
                blocks[label].append(element)
            else:
                raise ValidationError(f"Cadena de crecimiento restringido inválida: {tuple(rgs)}")
        return cls(tuple(tuple(b) for b in blocks))

    @classmethod
    def single_block(cls, n: int) -> 'SetPartition':
        return cls((tuple(range(1, n + 1)),))

    @classmethod
    def singletons(cls, n: int) -> 'SetPartition':
        return cls(tuple((i,) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def size(self) -> int:
        """Número de bloques (#π)."""
        return len(self.blocks)

    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self) -> Tuple[int, ...]:
        """Etiqueta de bloque (base 0) de cada elemento 1..n; coincide con la cadena de crecimiento."""
        labels = [0] * self.n
        for index, block in enumerate(self.blocks):
            for element in block:
                labels[element - 1] = index
        return tuple(labels)

    def shape(self) -> 'IntegerPartition':
        """Tamaños de bloque ordenados de forma decreciente."""
        return IntegerPartition(tuple(sorted(self.block_sizes(), reverse=True)))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


@dataclass(frozen=True)
class IntegerPartition:
    """
    Partición entera de n: partes positivas en orden débilmente decreciente.
    """

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValidationError(f"Las partes deben ser positivas: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValidationError(f"Las partes deben ser decrecientes: {parts}")
        object.__setattr__(self, 'parts', parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Número de partes (#λ)."""
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return '(' + ','.join(str(p) for p in self.parts) + ')'


def refines(sigma: Permutation, pi: SetPartition) -> bool:
    """
    Indica si σ ≤ π: cada ciclo de σ está contenido en algún bloque de π.

    Raises:
        DimensionMismatchError: Si σ y π actúan sobre conjuntos de distinto tamaño.
    """
    if sigma.n != pi.n:
        raise DimensionMismatchError(f"Permutación de tamaño {sigma.n} y partición de tamaño {pi.n}")
    labels = pi.block_of()
    return all(labels[i - 1] == labels[sigma(i) - 1] for i in range(1, sigma.n + 1))


def refines_partition(finer: SetPartition, coarser: SetPartition) -> bool:
    """
    Indica si ``finer`` ≤ ``coarser`` en el retículo de particiones (cada bloque de
    ``finer`` está contenido en un bloque de ``coarser``).
    """
    if finer.n != coarser.n:
        raise DimensionMismatchError(f"Particiones de tamaños {finer.n} y {coarser.n}")
    labels = coarser.block_of()
    return all(len({labels[x - 1] for x in block}) == 1 for block in finer.blocks)


def restrict_blocks(partition: SetPartition, block: Iterable[int]) -> int:
    """
    Número de bloques de la restricción π′|_b, es decir, cuántos bloques de π′ cortan a b.
    """
    block_set = set(block)
    if not block_set <= set(range(1, partition.n + 1)):
        raise DimensionMismatchError(f"El conjunto {sorted(block_set)} no está contenido en 1..{partition.n}")
    return sum(1 for b in partition.blocks if block_set.intersection(b))


def cycle_count(sigma: Permutation) -> int:
    """Número de ciclos de σ (#σ), contando los puntos fijos."""
    return len(sigma.cycles())


def cycle_type(sigma: Permutation) -> IntegerPartition:
    """Tipo cíclico de σ como partición entera de n."""
    return sigma.cycle_type()
