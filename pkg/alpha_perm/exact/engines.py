"""
Motores exactos del α-permanente y del determinante.

- Definición: recorrido en profundidad de las permutaciones, fila a fila, que registra
  los ciclos a medida que se cierran. El mismo recorrido da el polinomio en α y las sumas por
  tipo cíclico.
- Cofactores: desarrollo recursivo por la última fila.
- Determinante: factorización LU con pivoteo parcial (scipy).
"""
import math
import warnings
from collections import defaultdict
from typing import Callable, Dict, List, Tuple

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from alpha_perm.combinatorics.types import IntegerPartition, SetPartition
from alpha_perm.config import settings
from alpha_perm.exact.matrix import as_matrix, submatrix
from alpha_perm.schemas.params import parse_complex
from alpha_perm.schemas.results import AlphaPermanentResult, Method
from alpha_perm.utils.error_handling import DimensionMismatchError, ValidationError, check_size
from alpha_perm.utils.logging import get_logger

logger = get_logger(__name__)


def _walk_permutations(rows: List[List[complex]], visit: Callable[[complex, List[int]], None]) -> None:
    """
    Recorre las permutaciones con producto diagonal no nulo.

    Para cada una llama a ``visit(producto, longitudes_de_ciclo)``. Los caminos abiertos
    se representan por su cabeza y su cola; asignar σ(i) = j cierra un ciclo si j es la
    cabeza del camino que termina en i y, si no, concatena los dos caminos.
    """
    n = len(rows)
    used = [False] * n
    head = list(range(n))  # cabeza del camino que termina en t
    tail = list(range(n))  # cola del camino que empieza en h
    size = [1] * n         # longitud del camino que empieza en h
    cycles: List[int] = []

    def step(i: int, product: complex) -> None:
        if i == n:
            visit(product, cycles)
            return
        row = rows[i]
        h = head[i]
        for j in range(n):
            entry = row[j]
            if used[j] or entry == 0:
                continue
            used[j] = True
            if j == h:
                cycles.append(size[h])
                step(i + 1, product * entry)
                cycles.pop()
            else:
                t = tail[j]
                saved = (tail[h], head[t], size[h])
                tail[h], head[t], size[h] = t, h, size[h] + size[j]
                step(i + 1, product * entry)
                tail[h], head[t], size[h] = saved
            used[j] = False

    step(0, 1 + 0j)


def _as_rows(matrix: np.ndarray) -> List[List[complex]]:
    return [[complex(x) for x in row] for row in matrix.tolist()]


def cycle_count_polynomial(matrix) -> List[complex]:
    """
    Coeficientes P_0..P_n tales que per_α M = sum_k P_k α^k.

    P_k es la suma de los productos diagonales de las permutaciones con k ciclos.

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    check_size(n, settings.MAX_PERMUTATION_N, "cycle_count_polynomial")
    coefficients = [0j] * (n + 1)

    def visit(product: complex, cycles: List[int]) -> None:
        coefficients[len(cycles)] += product

    _walk_permutations(_as_rows(matrix), visit)
    return coefficients


def cycle_type_sums(matrix) -> Dict[IntegerPartition, complex]:
    """
    Suma de productos diagonales agrupada por tipo cíclico de la permutación.

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    matrix = as_matrix(matrix)
    check_size(matrix.shape[0], settings.MAX_PERMUTATION_N, "cycle_type_sums")
    sums: Dict[Tuple[int, ...], complex] = defaultdict(complex)

    def visit(product: complex, cycles: List[int]) -> None:
        sums[tuple(sorted(cycles, reverse=True))] += product

    _walk_permutations(_as_rows(matrix), visit)
    return {IntegerPartition(parts): value for parts, value in sums.items()}


class _TermSum:
    """
    Suma de términos complejos con math.fsum por tramos.

    El total acumulado entra en cada tramo, de modo que solo se redondea una vez por tramo.
    """

    def __init__(self, chunk: int = 1 << 16) -> None:
        self.chunk = chunk
        self.real: List[float] = [0.0]
        self.imag: List[float] = [0.0]

    def add(self, value: complex) -> None:
        self.real.append(value.real)
        self.imag.append(value.imag)
        if len(self.real) > self.chunk:
            self.real = [math.fsum(self.real)]
            self.imag = [math.fsum(self.imag)]

    def value(self) -> complex:
        return complex(math.fsum(self.real), math.fsum(self.imag))


def per_alpha_def(matrix, alpha) -> complex:
    """
    α-permanente por definición: sum_σ α^{#σ} prod_i M_{i,σ(i)}.

    Cada término α^{#σ} prod_i M_{i,σ(i)} se suma por separado con math.fsum; agrupar antes
    por número de ciclos pierde dígitos cuando los coeficientes se cancelan.

    Args:
        matrix: Matriz cuadrada compleja.
        alpha: Escalar α (número o cadena "re,im").

    Returns:
        complex: per_α M.

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    check_size(n, settings.MAX_PERMUTATION_N, "per_alpha_def")
    alpha = parse_complex(alpha)
    powers = [alpha ** k for k in range(n + 1)]
    accumulator = _TermSum()

    def visit(product: complex, cycles: List[int]) -> None:
        accumulator.add(powers[len(cycles)] * product)

    _walk_permutations(_as_rows(matrix), visit)
    return accumulator.value()


def _cofactor(rows: List[List[complex]], alpha: complex) -> complex:
    n = len(rows)
    if n == 0:
        return 1 + 0j
    if n == 1:
        return alpha * rows[0][0]
    last = rows[-1]
    upper = rows[:-1]
    total = 0j
    if last[-1] != 0:
        total += alpha * last[-1] * _cofactor([r[:-1] for r in upper], alpha)
    for j in range(n - 1):
        if last[j] == 0:
            continue
        # La columna n ocupa el lugar de la columna j
        minor = [r[:j] + [r[-1]] + r[j + 1:-1] for r in upper]
        total += last[j] * _cofactor(minor, alpha)
    return total


def per_alpha_cofactor(matrix, alpha) -> complex:
    """
    α-permanente por desarrollo en cofactores a lo largo de la última fila:

        per_α M = α M_{nn} per_α M^{(n,n)} + sum_{j<n} M_{nj} per_α M^{[j<-n]}

    donde M^{[j<-n]} elimina la fila n y coloca la columna n en la posición de la columna j.

    Raises:
        SizeLimitError: Si n supera settings.MAX_PERMUTATION_N.
    """
    matrix = as_matrix(matrix)
    check_size(matrix.shape[0], settings.MAX_PERMUTATION_N, "per_alpha_cofactor")
    return _cofactor(_as_rows(matrix), parse_complex(alpha))


def det(matrix) -> complex:
    """
    Determinante por LU con pivoteo parcial.

    Un pivote con |U_kk| < settings.SINGULAR_PIVOT_TOL · (mayor norma de fila) se trata como
    cero y el determinante devuelto es 0. La matriz vacía tiene determinante 1.

    Args:
        matrix: Matriz cuadrada (puede ser 0x0).

    Returns:
        complex: det M.
    """
    a = np.asarray(matrix, dtype=np.complex128)
    if a.size == 0:
        return 1 + 0j
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"La matriz debe ser cuadrada, forma recibida {a.shape}")
    scale = float(np.linalg.norm(a, axis=1).max())
    if scale == 0:
        return 0j
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', LinAlgWarning)
        lu, piv = lu_factor(a, check_finite=False)
    pivots = np.diag(lu)
    if np.any(np.abs(pivots) < settings.SINGULAR_PIVOT_TOL * scale):
        return 0j
    swaps = int(np.count_nonzero(piv != np.arange(a.shape[0])))
    sign = -1 if swaps % 2 else 1
    return complex(sign * np.prod(pivots))


def per_alpha_masked(matrix, partition: SetPartition, alpha) -> complex:
    """
    per_α(M·π) como producto sobre los bloques de per_α M[b], sin construir M·π.

    Raises:
        DimensionMismatchError: Si π no particiona {1..n}.
        SizeLimitError: Si algún bloque supera settings.MAX_PERMUTATION_N.
    """
    matrix = as_matrix(matrix)
    if partition.n != matrix.shape[0]:
        raise DimensionMismatchError(
            f"Partición de tamaño {partition.n} para una matriz {matrix.shape[0]}x{matrix.shape[0]}"
        )
    alpha = parse_complex(alpha)
    result = 1 + 0j
    for block in partition.blocks:
        result *= per_alpha_def(submatrix(matrix, block), alpha)
    return result


def compute_alpha_permanent(matrix, alpha, engine: str = Method.DEFINITION.value) -> AlphaPermanentResult:
    """
    Calcula per_α M con el motor indicado.

    Args:
        matrix: Matriz cuadrada compleja.
        alpha: Escalar α.
        engine (str): 'definition', 'cofactor' o 'det_decomposition'.

    Returns:
        AlphaPermanentResult: Valor, motor y número de términos evaluados (n! para los
            motores por permutaciones, número de particiones para la descomposición).

    Raises:
        ValidationError: Si el motor no existe.
    """
    from alpha_perm.exact.identities import det_decomposition

    matrix = as_matrix(matrix)
    alpha = parse_complex(alpha)
    n = matrix.shape[0]
    try:
        method = Method(engine)
    except ValueError as e:
        raise ValidationError(f"Motor desconocido: {engine}", e)

    log = logger.bind(n=n, alpha=str(alpha), engine=method.value)
    log.debug("Calculando alpha-permanente")

    if method is Method.DEFINITION:
        value, terms = per_alpha_def(matrix, alpha), math.factorial(n)
    elif method is Method.COFACTOR:
        value, terms = per_alpha_cofactor(matrix, alpha), math.factorial(n)
    else:
        value, terms = det_decomposition(matrix, alpha)

    log.debug("Cálculo terminado", terms=terms)
    return AlphaPermanentResult(value=value, method=method, terms_evaluated=terms)
