"""
Reproducción de la tabla de estimaciones sobre la matriz X1.

La columna exacta se compara con los valores publicados con una banda relativa del 5 %:
X1 se publica redondeada a dos decimales y los valores exactos son sensibles a ese redondeo.
"""
from typing import Any, Dict, List, Optional

from alpha_perm.cli.matrix_io import load_x1
from alpha_perm.config import settings
from alpha_perm.exact.engines import per_alpha_def
from alpha_perm.sampler.importance import is_estimate_partitions
from alpha_perm.utils.logging import get_logger
from alpha_perm.utils.numerics import relative_error

logger = get_logger(__name__)

X1_ALPHAS = (-2.0, -3.0, -2.5, 1.0)

# Columna "Actual" publicada
X1_PUBLISHED = {-2.0: 407.52, -3.0: 117488.0, -2.5: -44088.0, 1.0: 1.6e8}

PUBLISHED_TOLERANCE = 0.05


def x1_report(seed: Optional[int] = None, n_samples: Optional[int] = None) -> List[Dict[str, Any]]:
    """
    Calcula, para cada α, el valor exacto sobre X1 y la estimación por particiones
    con la propuesta por defecto.

    Returns:
        List[Dict[str, Any]]: Una fila por α con 'alpha', 'exact', 'published',
            'published_relative_error', 'estimate', 'stderr', 'relative_stderr' y 'proposal'.
    """
    seed = settings.DEFAULT_SEED if seed is None else seed
    n_samples = settings.DEFAULT_SAMPLES if n_samples is None else n_samples
    x1 = load_x1()
    rows = []
    for alpha in X1_ALPHAS:
        exact = per_alpha_def(x1, alpha).real
        report = is_estimate_partitions(x1.real, alpha, n_samples=n_samples, seed=seed)
        published = X1_PUBLISHED[alpha]
        rows.append({
            'alpha': alpha,
            'exact': exact,
            'published': published,
            'published_relative_error': relative_error(exact, published),
            'estimate': report.estimate,
            'stderr': report.stderr,
            'relative_stderr': report.relative_stderr,
            'proposal': f"PE(a={report.params.a:g}, theta={report.params.theta:g})",
        })
        logger.info("Fila calculada", alpha=alpha, exact=exact, estimate=report.estimate)
    return rows


def published_mismatches(rows: List[Dict[str, Any]]) -> List[str]:
    """Filas cuya columna exacta se aparta de la publicada más que la banda admitida."""
    return [
        f"alpha={row['alpha']:g}: exacto {row['exact']:.6g}, publicado {row['published']:.6g}"
        for row in rows
        if row['published_relative_error'] > PUBLISHED_TOLERANCE
    ]
