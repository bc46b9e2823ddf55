"""
Particiones aleatorias de Pitman-Ewens(a, θ) por asignación secuencial (esquema de urna de Pólya).

El elemento i+1 se une a un bloque b existente con probabilidad (#b - a)/(i + θ) o abre
un bloque nuevo con probabilidad (θ + a·K)/(i + θ), siendo K el número de bloques actual.
"""
from typing import List, Sequence

import numpy as np

from alpha_perm.combinatorics.numbers import rising_factorial
from alpha_perm.combinatorics.types import SetPartition
from alpha_perm.schemas.params import PitmanEwensParams
from alpha_perm.utils.error_handling import ValidationError
from alpha_perm.utils.numerics import as_negative_integer


def default_proposal(alpha: float) -> PitmanEwensParams:
    """
    Propuesta por defecto para estimar per_α.

    Para α = -k se restringe a particiones con a lo sumo k bloques (a = -1, θ = k);
    en otro caso se usa Ewens(0, 1).
    """
    k = as_negative_integer(alpha)
    if k is not None:
        return PitmanEwensParams.restricted(k)
    return PitmanEwensParams.ewens(1.0)


def seat(n: int, params: PitmanEwensParams, uniforms: Sequence[float]) -> SetPartition:
    """
    Asigna los elementos 1..n a bloques consumiendo un uniforme por elemento.

    El primer elemento siempre abre un bloque; su uniforme se consume igualmente.
    """
    a, theta = params.a, params.theta
    blocks: List[List[int]] = []
    for i in range(n):
        if i == 0:
            blocks.append([1])
            continue
        r = uniforms[i] * (i + theta)
        for block in blocks:
            r -= len(block) - a
            if r < 0:
                block.append(i + 1)
                break
        else:
            if theta + a * len(blocks) > 0:
                blocks.append([i + 1])
            else:
                # Redondeo en el régimen restringido: el último bloque absorbe el resto
                blocks[-1].append(i + 1)
    return SetPartition(tuple(tuple(b) for b in blocks))


def pe_sample(n: int, params: PitmanEwensParams, rng: np.random.Generator) -> SetPartition:
    """
    Muestra una partición de {1..n} con distribución Pitman-Ewens(a, θ).

    Args:
        n (int): Tamaño del conjunto.
        params (PitmanEwensParams): Parámetros admisibles.
        rng (np.random.Generator): Generador; se consumen exactamente n uniformes.

    Returns:
        SetPartition: La partición muestreada.

    Raises:
        ValidationError: Si n < 1.
        InadmissibleParamsError: Si los parámetros no son admisibles.
    """
    if n < 1:
        raise ValidationError(f"pe_sample: n debe ser >= 1, se recibió {n}")
    params.ensure_admissible()
    return seat(n, params, rng.random(n))


def pe_prob(partition: SetPartition, params: PitmanEwensParams) -> float:
    """
    Probabilidad de la partición bajo Pitman-Ewens(a, θ):

        prod_{i=1}^{K-1} (θ + i·a) / (θ + 1)^{↑(n-1)} · prod_b (1 - a)^{↑(#b - 1)}

    Vale 0 fuera del soporte (más de m bloques en el régimen restringido).

    Raises:
        InadmissibleParamsError: Si los parámetros no son admisibles.
    """
    params.ensure_admissible()
    a, theta = params.a, params.theta
    numerator = 1.0
    for i in range(1, partition.size):
        numerator *= theta + i * a
    for size in partition.block_sizes():
        numerator *= rising_factorial(1 - a, size - 1)
    return float(numerator / rising_factorial(theta + 1, partition.n - 1))
