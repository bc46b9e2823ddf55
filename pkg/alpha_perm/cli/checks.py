"""
Baterías de verificación numérica de las identidades del α-permanente.

Cada batería genera, para cada intento, matrices y escalares aleatorios con el flujo
(seed, intento) y compara ambos lados de una identidad con error relativo.
"""
import logging
from typing import Callable, Dict, List, Tuple

import numpy as np

from alpha_perm.combinatorics.enumeration import enumerate_set_partitions
from alpha_perm.combinatorics.numbers import rising_factorial
from alpha_perm.config import settings
from alpha_perm.exact import engines, identities
from alpha_perm.exact.generators import (
    make_rng,
    random_block_sizes,
    random_complex_matrix,
    random_permutation,
    random_scalar,
    random_set_partition
)
from alpha_perm.exact.matrix import partition_matrix, permutation_matrix
from alpha_perm.immanants import expansion
from alpha_perm.immanants.characters import character_table
from alpha_perm.schemas.params import BlockSpec, HomSymSpec
from alpha_perm.schemas.results import SuiteReport
from alpha_perm.special import closed_forms
from alpha_perm.utils.numerics import is_close, relative_error

logger = logging.getLogger(__name__)

# (etiqueta, valor calculado, valor de referencia)
Comparison = Tuple[str, complex, complex]


def _thm1(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    alpha, beta = random_scalar(rng), random_scalar(rng)
    return [(
        f"alpha={alpha:.4g}, beta={beta:.4g}",
        identities.rhs_decomposition(m, alpha, beta),
        engines.per_alpha_def(m, alpha * beta),
    )]


def _thm2_sum(rng: np.random.Generator, n: int) -> List[Comparison]:
    a, b = random_complex_matrix(n, rng), random_complex_matrix(n, rng)
    alpha = random_scalar(rng)
    return [(
        f"alpha={alpha:.4g}",
        identities.rhs_sum_identity(a, b, alpha),
        engines.per_alpha_def(a + b, alpha),
    )]


def _thm2_product(rng: np.random.Generator, n: int) -> List[Comparison]:
    a, b = random_complex_matrix(n, rng), random_complex_matrix(n, rng)
    alpha = random_scalar(rng)
    return [(
        f"alpha={alpha:.4g}",
        identities.rhs_product_identity(a, b, alpha),
        engines.per_alpha_def(a @ b, alpha),
    )]


def _eq3(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    return [("permanente", identities.per_via_determinants(m), engines.per_alpha_def(m, 1))]


def _eq8(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    beta = random_scalar(rng)
    comparisons = [
        (f"beta={-k}", identities.per_alpha_via_det(m, -k), engines.per_alpha_def(m, -k))
        for k in (1, 2, 3)
    ]
    comparisons.append(
        ("beta=-1 frente a (-1)^n det", identities.per_alpha_via_det(m, -1), (-1) ** n * engines.det(m))
    )
    comparisons.append(
        (f"beta={beta:.4g}", identities.per_alpha_via_det(m, beta), engines.per_alpha_def(m, beta))
    )
    return comparisons


def _eq9(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    alpha = random_scalar(rng)
    return [(f"alpha={alpha:.4g}", identities.rhs_det_expansion(m, alpha), (-1) ** n * engines.det(m))]


def _corollary(rng: np.random.Generator, n: int) -> List[Comparison]:
    a = random_complex_matrix(n, rng)
    alpha = random_scalar(rng)
    plus_identity = a + np.eye(n)
    return [
        (
            f"alpha={alpha:.4g}",
            identities.per_alpha_plus_identity(a, alpha),
            engines.per_alpha_def(plus_identity, alpha),
        ),
        ("det(A+I)", identities.det_sum_identity_rhs(a), engines.det(plus_identity)),
    ]


def _immanant(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    alpha, beta = random_scalar(rng), random_scalar(rng)
    reference = engines.per_alpha_def(m, alpha)
    comparisons = [
        (f"inmanantes alpha={alpha:.4g}", expansion.per_via_immanants(m, alpha), reference),
        (
            f"descomposición alpha={alpha:.4g}, beta={beta:.4g}",
            expansion.per_immanant_decomposition_rhs(m, alpha, beta),
            reference,
        ),
    ]
    if n <= settings.MAX_COEFFICIENT_SOLVE_N:
        solved = expansion.solve_coefficients(alpha, n)
        for shape in character_table(n).partitions:
            comparisons.append((f"c_{shape}", solved[shape], expansion.c_lambda(alpha, shape)))
    return comparisons


def _mobius(rng: np.random.Generator, n: int) -> List[Comparison]:
    m = random_complex_matrix(n, rng)
    beta = random_scalar(rng)
    comparisons = []
    for partition in enumerate_set_partitions(n):
        lhs, rhs = expansion.mobius_identity_check(m, beta, partition)
        comparisons.append((f"pi={partition.blocks}", lhs, rhs))
    return comparisons


def _special(rng: np.random.Generator, n: int) -> List[Comparison]:
    alpha = random_scalar(rng)
    sigma = random_permutation(n, rng)
    partition = random_set_partition(n, rng)
    homsym = HomSymSpec(a=random_scalar(rng), b=random_scalar(rng), n=n)
    comparisons = [
        (
            "matriz de permutación",
            closed_forms.per_alpha_permutation_matrix(sigma, alpha),
            engines.per_alpha_def(permutation_matrix(sigma), alpha),
        ),
        (
            "matriz de partición",
            closed_forms.per_alpha_partition_matrix(partition, alpha),
            engines.per_alpha_def(partition_matrix(partition), alpha),
        ),
        (
            "H[a,b]",
            closed_forms.per_alpha_homsym(homsym, alpha),
            engines.per_alpha_def(closed_forms.materialize(homsym), alpha),
        ),
        ("J_n", engines.per_alpha_def(np.ones((n, n)), alpha), rising_factorial(alpha, n)),
    ]
    if n >= 2:
        n1, n2 = random_block_sizes(n, rng)
        block = BlockSpec(
            a11=random_scalar(rng), a12=random_scalar(rng), a21=random_scalar(rng), a22=random_scalar(rng),
            n1=n1, n2=n2,
        )
        comparisons.append((
            f"A[{n1},{n2}]",
            closed_forms.per_alpha_block2(block, alpha),
            engines.per_alpha_def(closed_forms.materialize(block), alpha),
        ))
    return comparisons


SUITES: Dict[str, Callable[[np.random.Generator, int], List[Comparison]]] = {
    'thm1': _thm1,
    'thm2-sum': _thm2_sum,
    'thm2-product': _thm2_product,
    'eq3': _eq3,
    'eq8': _eq8,
    'eq9': _eq9,
    'corollary': _corollary,
    'immanant': _immanant,
    'mobius': _mobius,
    'special': _special,
}

# Las sumas con dos niveles de cancelación pierden más dígitos
SUITE_TOLERANCE_FACTOR = {'immanant': 10.0}


def run_suite(name: str, n: int, trials: int, seed: int) -> SuiteReport:
    """
    Ejecuta una batería de verificación.

    Args:
        name (str): Nombre de la batería (clave de SUITES).
        n (int): Dimensión de las matrices.
        trials (int): Número de intentos aleatorios.
        seed (int): Semilla; el intento t usa el flujo (seed, t).

    Returns:
        SuiteReport: Error relativo máximo, peor caso y comparaciones fuera de tolerancia.

    Raises:
        KeyError: Si la batería no existe.
        SizeLimitError: Si n supera el límite de alguna operación de la batería.
    """
    suite = SUITES[name]
    tolerance = settings.REL_TOL * SUITE_TOLERANCE_FACTOR.get(name, 1.0)
    report = SuiteReport(suite=name, n=n, trials=trials, seed=seed, tolerance=tolerance)

    for trial in range(trials):
        for label, value, reference in suite(make_rng(seed, trial), n):
            error = relative_error(value, reference)
            report.checks += 1
            if error >= report.max_relative_error:
                report.max_relative_error = error
                report.worst_case = f"intento {trial}: {label}"
            if not is_close(value, reference, rel_tol=tolerance):
                report.failures.append(
                    f"intento {trial}: {label}: {value:.10g} frente a {reference:.10g} "
                    f"(error relativo {error:.3g})"
                )

    logger.info(
        f"Batería {name} (n={n}, intentos={trials}): error relativo máximo {report.max_relative_error:.3g}, "
        f"{len(report.failures)} fallos"
    )
    return report
