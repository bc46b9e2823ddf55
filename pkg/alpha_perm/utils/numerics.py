"""
Comparaciones numéricas compartidas por los motores y las verificaciones de identidades.
"""
from typing import Optional

from alpha_perm.config import settings


def relative_error(value: complex, reference: complex, floor: Optional[float] = None) -> float:
    """
    Error relativo de ``value`` respecto a ``reference`` con piso absoluto.

    Args:
        value (complex): Valor calculado.
        reference (complex): Valor de referencia.
        floor (Optional[float]): Piso del denominador. Si es None, se usa settings.ABS_FLOOR.

    Returns:
        float: |value - reference| / max(|reference|, floor).
    """
    floor = settings.ABS_FLOOR if floor is None else floor
    return abs(value - reference) / max(abs(reference), floor)


def is_close(
    value: complex,
    reference: complex,
    rel_tol: Optional[float] = None,
    abs_floor: Optional[float] = None
) -> bool:
    """
    Indica si dos escalares coinciden con tolerancia relativa y piso absoluto.

    Args:
        value (complex): Valor calculado.
        reference (complex): Valor de referencia.
        rel_tol (Optional[float]): Tolerancia relativa. Si es None, settings.REL_TOL.
        abs_floor (Optional[float]): Piso absoluto. Si es None, settings.ABS_FLOOR.

    Returns:
        bool: True si |value - reference| <= max(rel_tol * max(|value|, |reference|), abs_floor).
    """
    rel_tol = settings.REL_TOL if rel_tol is None else rel_tol
    abs_floor = settings.ABS_FLOOR if abs_floor is None else abs_floor
    scale = max(abs(value), abs(reference))
    return abs(value - reference) <= max(rel_tol * scale, abs_floor)


def as_negative_integer(value: complex) -> Optional[int]:
    """
    Devuelve k si ``value`` es (numéricamente) el entero negativo -k, o None en otro caso.

    La parte real debe ser entera exactamente y la parte imaginaria menor que
    settings.INTEGER_TEST_TOL en valor absoluto.
    """
    value = complex(value)
    if abs(value.imag) >= settings.INTEGER_TEST_TOL:
        return None
    real = value.real
    if real >= 0 or real != int(real):
        return None
    return -int(real)
