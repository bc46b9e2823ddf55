"""
Estimadores de importancia del α-permanente.

- Sobre particiones: per_α M = (-1)^n sum_π (-α)^{↓#π} det(M·π); se muestrea π con
  Pitman-Ewens y se promedian los pesos (-α)^{↓#π} det(M·π) / P(π).
- Sobre permutaciones uniformes: promedio de n!·α^{#σ} prod_j M_{j,σ(j)}.

Las muestras se generan en bloques de settings.SAMPLER_CHUNK_SIZE; el bloque c usa el
flujo Philox (seed, c), de modo que el resultado no depende de cómo se repartan los bloques.
"""
import math
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from alpha_perm.combinatorics.numbers import falling_factorial
from alpha_perm.combinatorics.types import Permutation
from alpha_perm.config import settings
from alpha_perm.exact.engines import det
from alpha_perm.exact.generators import make_rng
from alpha_perm.exact.matrix import as_matrix, submatrix
from alpha_perm.sampler.pitman_ewens import default_proposal, pe_prob, seat
from alpha_perm.schemas.params import PitmanEwensParams
from alpha_perm.schemas.results import EstimateReport
from alpha_perm.utils.error_handling import SamplerError, UnsupportedInputError, ValidationError
from alpha_perm.utils.logging import get_logger

logger = get_logger(__name__)


def _real_matrix(matrix) -> np.ndarray:
    matrix = as_matrix(matrix)
    if np.any(matrix.imag != 0):
        raise UnsupportedInputError("El estimador por importancia requiere una matriz real")
    return matrix.real.copy()


def _check_sample_size(n_samples: int) -> None:
    if n_samples < 2:
        raise ValidationError(f"Se necesitan al menos 2 muestras, se recibió {n_samples}")


def _draw_weights(
    n_samples: int,
    seed: int,
    n: int,
    weight: Callable[[np.ndarray], float]
) -> np.ndarray:
    """Pesos de n_samples muestras; ``weight`` recibe los n uniformes de cada muestra."""
    chunk_size = settings.SAMPLER_CHUNK_SIZE
    weights = np.empty(n_samples)
    for chunk, start in enumerate(range(0, n_samples, chunk_size)):
        count = min(chunk_size, n_samples - start)
        uniforms = make_rng(seed, chunk).random((count, n))
        for offset in range(count):
            weights[start + offset] = weight(uniforms[offset])
    return weights


def _summarize(weights: np.ndarray, sign: int) -> Tuple[float, float]:
    estimate = sign * float(np.mean(weights))
    stderr = float(np.std(weights, ddof=1) / math.sqrt(len(weights)))
    return estimate, stderr


def partition_weights(
    matrix: np.ndarray,
    alpha: float,
    params: PitmanEwensParams,
    n_samples: int,
    seed: int
) -> np.ndarray:
    """
    Pesos (-α)^{↓#π} det(M·π) / P(π) de las particiones muestreadas, sin el signo (-1)^n.

    Los determinantes se memorizan por bloque durante la ejecución.

    Raises:
        SamplerError: Si una partición muestreada tiene probabilidad nula.
    """
    n = matrix.shape[0]
    determinants: Dict[Tuple[int, ...], float] = {}

    def weight(uniforms: np.ndarray) -> float:
        partition = seat(n, params, uniforms)
        probability = pe_prob(partition, params)
        if probability <= 0:
            raise SamplerError(f"Probabilidad de propuesta nula para la partición {partition.blocks}")
        value = falling_factorial(-alpha, partition.size) / probability
        for block in partition.blocks:
            block_det = determinants.get(block)
            if block_det is None:
                block_det = det(submatrix(matrix, block)).real
                determinants[block] = block_det
            value *= block_det
        return value

    return _draw_weights(n_samples, seed, n, weight)


def is_estimate_partitions(
    matrix,
    alpha: float,
    params: Optional[PitmanEwensParams] = None,
    n_samples: Optional[int] = None,
    seed: Optional[int] = None
) -> EstimateReport:
    """
    Estima per_α M muestreando particiones con Pitman-Ewens.

    Args:
        matrix: Matriz real n x n.
        alpha (float): α real.
        params (Optional[PitmanEwensParams]): Propuesta. Si es None, ``default_proposal(alpha)``.
        n_samples (Optional[int]): Número de muestras N (>= 2). Si es None, settings.DEFAULT_SAMPLES.
        seed (Optional[int]): Semilla. Si es None, settings.DEFAULT_SEED.

    Returns:
        EstimateReport: (-1)^n por la media de los pesos y error estándar std(w, ddof=1)/sqrt(N).

    Raises:
        UnsupportedInputError: Si la matriz tiene entradas no reales.
        InadmissibleParamsError: Si la propuesta no es admisible.
        SamplerError: Si una partición muestreada tiene probabilidad nula.
    """
    matrix = _real_matrix(matrix)
    n = matrix.shape[0]
    alpha = float(alpha)
    params = (default_proposal(alpha) if params is None else params).ensure_admissible()
    n_samples = settings.DEFAULT_SAMPLES if n_samples is None else int(n_samples)
    seed = settings.DEFAULT_SEED if seed is None else int(seed)
    _check_sample_size(n_samples)

    log = logger.bind(n=n, alpha=alpha, a=params.a, theta=params.theta, seed=seed)
    log.debug("Iniciando muestreo por particiones", n_samples=n_samples)

    weights = partition_weights(matrix, alpha, params, n_samples, seed)
    estimate, stderr = _summarize(weights, (-1) ** n)
    log.debug("Muestreo terminado", estimate=estimate, stderr=stderr)
    return EstimateReport(
        estimate=estimate,
        stderr=stderr,
        n_samples=n_samples,
        seed=seed,
        target_alpha=alpha,
        proposal='pitman-ewens',
        params=params,
    )


def is_estimate_permutations_uniform(
    matrix,
    alpha: float,
    n_samples: Optional[int] = None,
    seed: Optional[int] = None
) -> EstimateReport:
    """
    Estima per_α M con permutaciones uniformes: media de n!·α^{#σ} prod_j M_{j,σ(j)}.

    La permutación de cada muestra es el orden (argsort) de sus n uniformes.

    Raises:
        UnsupportedInputError: Si la matriz tiene entradas no reales.
    """
    matrix = _real_matrix(matrix)
    n = matrix.shape[0]
    alpha = float(alpha)
    n_samples = settings.DEFAULT_SAMPLES if n_samples is None else int(n_samples)
    seed = settings.DEFAULT_SEED if seed is None else int(seed)
    _check_sample_size(n_samples)
    scale = math.factorial(n)
    rows = np.arange(n)

    def weight(uniforms: np.ndarray) -> float:
        images = np.argsort(uniforms, kind='stable')
        sigma = Permutation(tuple(int(x) + 1 for x in images))
        return scale * alpha ** len(sigma.cycles()) * float(np.prod(matrix[rows, images]))

    weights = _draw_weights(n_samples, seed, n, weight)
    estimate, stderr = _summarize(weights, 1)
    logger.debug("Muestreo uniforme terminado", n=n, alpha=alpha, estimate=estimate, stderr=stderr)
    return EstimateReport(
        estimate=estimate,
        stderr=stderr,
        n_samples=n_samples,
        seed=seed,
        target_alpha=alpha,
        proposal='uniform-permutations',
    )
