"""
Lectura y escritura de matrices en CSV.

Formatos:
- ``csv-dense``: n filas de n valores separados por comas.
- ``csv-upper`` (alias ``csv-upper-triangular-symmetric``): parte triangular superior por
  filas (la fila i tiene n - i + 1 valores), reflejada sobre la diagonal al leer.

Las líneas vacías y las que empiezan por '#' se ignoran. Los valores son decimales o
complejos con la sintaxis de Python (p. ej. ``(1.5-2j)``).
"""
import logging
import os
from typing import List

import numpy as np

from alpha_perm.exact.matrix import as_matrix
from alpha_perm.utils.error_handling import ConfigurationError, MatrixParseError, ValidationError

logger = logging.getLogger(__name__)

FIXTURES_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'fixtures'))
X1_PATH = os.path.join(FIXTURES_DIR, 'x1_upper.csv')

FORMATS = ('csv-dense', 'csv-upper')
FORMAT_ALIASES = {'csv-upper-triangular-symmetric': 'csv-upper'}
FORMAT_CHOICES = FORMATS + tuple(FORMAT_ALIASES)


def _canonical_format(fmt: str) -> str:
    fmt = FORMAT_ALIASES.get(fmt, fmt)
    if fmt not in FORMATS:
        raise MatrixParseError(f"Formato de matriz desconocido: {fmt}")
    return fmt


def _parse_value(token: str, path: str, line_number: int) -> complex:
    token = token.strip()
    try:
        return complex(float(token))
    except ValueError:
        pass
    try:
        return complex(token.replace(' ', ''))
    except ValueError as e:
        raise MatrixParseError(f"{path}:{line_number}: valor no numérico '{token}'", e)


def _read_rows(path: str) -> List[List[complex]]:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines = f.readlines()
    except OSError as e:
        raise MatrixParseError(f"No se puede leer el archivo de matriz: {path}", e)

    rows = []
    for line_number, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        rows.append([_parse_value(token, path, line_number) for token in stripped.split(',')])
    if not rows:
        raise MatrixParseError(f"El archivo de matriz está vacío: {path}")
    return rows


def read_matrix(path: str, fmt: str = 'csv-dense') -> np.ndarray:
    """
    Lee una matriz cuadrada desde un archivo CSV.

    Args:
        path (str): Ruta del archivo.
        fmt (str): 'csv-dense', 'csv-upper' o su alias 'csv-upper-triangular-symmetric'.

    Returns:
        np.ndarray: Matriz compleja n x n.

    Raises:
        MatrixParseError: Si el archivo no existe, tiene valores no numéricos o no finitos,
            o la forma no corresponde al formato.
    """
    fmt = _canonical_format(fmt)
    rows = _read_rows(path)
    n = len(rows)

    if fmt == 'csv-dense':
        bad = [i + 1 for i, row in enumerate(rows) if len(row) != n]
        if bad:
            raise MatrixParseError(f"{path}: se esperaban {n} valores por fila (filas {bad})")
        data = rows
    else:
        bad = [i + 1 for i, row in enumerate(rows) if len(row) != n - i]
        if bad:
            raise MatrixParseError(
                f"{path}: formato triangular superior inválido, "
                f"la fila i debe tener n - i + 1 valores (filas {bad})"
            )
        data = np.zeros((n, n), dtype=np.complex128)
        for i, row in enumerate(rows):
            data[i, i:] = row
            data[i:, i] = row

    try:
        matrix = as_matrix(data)
    except ValidationError as e:
        raise MatrixParseError(f"{path}: {e}", e)
    logger.debug(f"Matriz {n}x{n} leída de {path} ({fmt})")
    return matrix


def _format_value(value: complex) -> str:
    if value.imag == 0:
        return repr(float(value.real))
    return repr(complex(value))


def write_matrix(matrix, path: str, fmt: str = 'csv-dense') -> None:
    """
    Escribe una matriz en CSV con representación exacta (``repr``) de cada valor.

    Raises:
        MatrixParseError: Si el formato es desconocido o la matriz no es simétrica en 'csv-upper'.
    """
    fmt = _canonical_format(fmt)
    matrix = as_matrix(matrix)
    n = matrix.shape[0]
    if fmt == 'csv-upper' and not np.array_equal(matrix, matrix.T):
        raise MatrixParseError("El formato triangular superior requiere una matriz simétrica")

    with open(path, 'w', encoding='utf-8') as f:
        for i in range(n):
            start = i if fmt == 'csv-upper' else 0
            f.write(','.join(_format_value(complex(v)) for v in matrix[i, start:]) + '\n')


def load_x1(path: str = X1_PATH) -> np.ndarray:
    """
    Matriz X1 (8x8, simétrica definida positiva) incluida como fixture.

    Raises:
        ConfigurationError: Si la matriz leída no es real y definida positiva.
    """
    matrix = read_matrix(path, 'csv-upper')
    if np.any(matrix.imag != 0):
        raise ConfigurationError(f"{path}: X1 debe ser real")
    try:
        np.linalg.cholesky(matrix.real)
    except np.linalg.LinAlgError as e:
        raise ConfigurationError(f"{path}: X1 no es definida positiva", e)
    return matrix
