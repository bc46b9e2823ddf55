"""
Tablas de números combinatorios y verificación contra las tablas de rencontres impresas.
"""
import logging
import os
from typing import Any, Dict, List

import yaml

from alpha_perm.cli.matrix_io import FIXTURES_DIR
from alpha_perm.combinatorics.numbers import bell_upto, rencontres_c, stirling2
from alpha_perm.config import settings
from alpha_perm.utils.error_handling import ConfigurationError, ValidationError, check_size

logger = logging.getLogger(__name__)

PRINTED_TABLES_PATH = os.path.join(FIXTURES_DIR, 'rencontres_printed.yaml')

KINDS = ('rencontres', 'stirling', 'bell')


def rencontres_table(n: int) -> List[List[int]]:
    """Filas k = 1..n y columnas l = 0..n de c(n, k, l)."""
    check_size(n, settings.MAX_RENCONTRES_N, "rencontres_table")
    return [[rencontres_c(n, k, l) for l in range(n + 1)] for k in range(1, n + 1)]


def stirling_triangle(n: int) -> List[List[int]]:
    """Filas m = 1..n con s(m, 1..m)."""
    return [[stirling2(m, k) for k in range(1, m + 1)] for m in range(1, n + 1)]


def bell_table(n: int) -> List[List[int]]:
    """Filas m = 1..n con B(m, <=1..m); el último valor de cada fila es B(m)."""
    return [[bell_upto(m, k) for k in range(1, m + 1)] for m in range(1, n + 1)]


def build_table(kind: str, n: int) -> List[List[int]]:
    if n < 1:
        raise ValidationError(f"n debe ser >= 1, se recibió {n}")
    if kind == 'rencontres':
        return rencontres_table(n)
    if kind == 'stirling':
        return stirling_triangle(n)
    if kind == 'bell':
        return bell_table(n)
    raise ValidationError(f"Tipo de tabla desconocido: {kind}")


def load_printed_tables(path: str = PRINTED_TABLES_PATH) -> Dict[str, Any]:
    """
    Carga las tablas impresas y la lista de erratas.

    Returns:
        Dict[str, Any]: {'tables': {n: filas}, 'errata': [...]}.

    Raises:
        ConfigurationError: Si el fixture no existe o está mal formado.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ConfigurationError(f"No se pudo cargar el fixture de rencontres: {path}", e)
    if not isinstance(data, dict) or 'tables' not in data:
        raise ConfigurationError(f"Fixture de rencontres mal formado: {path}")
    tables = {int(n): [list(map(int, row)) for row in rows] for n, rows in data['tables'].items()}
    return {'tables': tables, 'errata': list(data.get('errata') or [])}


def corrected_printed_tables(printed: Dict[str, Any]) -> Dict[int, List[List[int]]]:
    """Tablas impresas con las erratas aplicadas."""
    tables = {n: [row[:] for row in rows] for n, rows in printed['tables'].items()}
    for erratum in printed['errata']:
        n, k, l = erratum['n'], erratum['k'], erratum['l']
        if tables[n][k - 1][l] != erratum['printed']:
            raise ConfigurationError(f"La errata {erratum} no coincide con la tabla impresa")
        tables[n][k - 1][l] = erratum['value']
    return tables


def verify_printed_tables(n: int) -> Dict[str, Any]:
    """
    Compara c(n, k, l) con la tabla impresa corregida, celda a celda y con igualdad exacta.

    Returns:
        Dict[str, Any]: 'mismatches' (celdas distintas) y 'errata' (erratas que afectan a n).

    Raises:
        ValidationError: Si no hay tabla impresa para n.
    """
    printed = load_printed_tables()
    tables = corrected_printed_tables(printed)
    if n not in tables:
        raise ValidationError(f"No hay tabla impresa para n={n} (disponibles: {sorted(tables)})")

    computed = rencontres_table(n)
    mismatches = [
        {'n': n, 'k': k, 'l': l, 'expected': tables[n][k - 1][l], 'computed': computed[k - 1][l]}
        for k in range(1, n + 1)
        for l in range(n + 1)
        if tables[n][k - 1][l] != computed[k - 1][l]
    ]
    errata = [e for e in printed['errata'] if e['n'] == n]
    for erratum in errata:
        logger.warning(
            f"Errata en la tabla impresa: c({erratum['n']},{erratum['k']},{erratum['l']}) "
            f"figura como {erratum['printed']}, el valor correcto es {erratum['value']}"
        )
    return {'mismatches': mismatches, 'errata': errata}
