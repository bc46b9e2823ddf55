"""
Números combinatorios exactos: factoriales generalizados, Stirling, Bell y rencontres.

Los conteos usan enteros de Python (precisión arbitraria). Las tablas de memoización
son globales al proceso y solo se escriben una vez por clave.
"""
import math
from collections import Counter
from functools import lru_cache
from typing import Any

from alpha_perm.combinatorics.types import IntegerPartition
from alpha_perm.utils.error_handling import ValidationError


def _check_order(j: int) -> None:
    if j < 0:
        raise ValidationError(f"El orden del factorial debe ser no negativo, se recibió {j}")


def falling_factorial(x: Any, j: int) -> Any:
    """
    Factorial descendente x^{↓j} = x(x-1)...(x-j+1).

    Args:
        x (Any): Escalar (entero, real o complejo). Con enteros el resultado es exacto.
        j (int): Número de factores.

    Returns:
        Any: El producto; 1 si j = 0.

    Raises:
        ValidationError: Si j < 0.
    """
    _check_order(j)
    result = 1
    for i in range(j):
        result *= x - i
    return result


def rising_factorial(x: Any, j: int) -> Any:
    """
    Factorial ascendente x^{↑j} = x(x+1)...(x+j-1).

    Args:
        x (Any): Escalar (entero, real o complejo).
        j (int): Número de factores.

    Returns:
        Any: El producto; 1 si j = 0.

    Raises:
        ValidationError: Si j < 0.
    """
    _check_order(j)
    result = 1
    for i in range(j):
        result *= x + i
    return result


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Números de Stirling de primera especie sin signo: permutaciones de [n] con k ciclos."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """
    Números de Stirling de segunda especie: particiones de [n] en exactamente k bloques.

    Fuera del rango 0 <= k <= n devuelve 0.
    """
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    """Número de Bell: total de particiones de [n]."""
    return sum(stirling2(n, k) for k in range(n + 1))


def bell_upto(n: int, k: int) -> int:
    """
    Particiones de [n] con a lo sumo k bloques: B(n, <=k) = sum_{j=1..k} s(n, j).

    Args:
        n (int): Tamaño del conjunto.
        k (int): Número máximo de bloques.

    Returns:
        int: El conteo exacto.

    Raises:
        ValidationError: Si no se cumple 1 <= k <= n.
    """
    if not 1 <= k <= n:
        raise ValidationError(f"bell_upto requiere 1 <= k <= n, se recibió n={n}, k={k}")
    return sum(stirling2(n, j) for j in range(1, k + 1))


@lru_cache(maxsize=None)
def rencontres_c(n: int, k: int, l: int) -> int:
    """
    Número de rencontres generalizado c(n, k, l): permutaciones de [n] con exactamente
    k ciclos y l puntos fijos.

    Recursión:
        c(n,k,l) = c(n-1,k-1,l-1) + (n-l-1) c(n-1,k,l) + (l+1) c(n-1,k,l+1)
    con c(0,0,0) = 1 y 0 fuera de rango.
    """
    if n < 0 or k < 0 or l < 0 or l > n or k > n:
        return 0
    if n == 0:
        return 1 if k == 0 and l == 0 else 0
    return (
        rencontres_c(n - 1, k - 1, l - 1)
        + (n - l - 1) * rencontres_c(n - 1, k, l)
        + (l + 1) * rencontres_c(n - 1, k, l + 1)
    )


def derangement_g(n: int, k: int) -> int:
    """Desarreglos de [n] con k ciclos: g(n, k) = c(n, k, 0)."""
    return rencontres_c(n, k, 0)


def rencontres_f(n: int, l: int) -> int:
    """Permutaciones de [n] con exactamente l puntos fijos: f(n, l) = sum_k c(n, k, l)."""
    return sum(rencontres_c(n, k, l) for k in range(n + 1))


@lru_cache(maxsize=None)
def _derangements(n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return 0
    # f(n+1,0) = n (f(n,0) + f(n-1,0))
    return (n - 1) * (_derangements(n - 1) + _derangements(n - 2))


def rencontres_f_recursive(n: int, l: int) -> int:
    """
    f(n, l) por la vía clásica: C(n, l) por el número de desarreglos de n - l elementos.
    """
    if l < 0 or l > n:
        return 0
    return math.comb(n, l) * _derangements(n - l)


def centralizer_order(nu: IntegerPartition) -> int:
    """z_ν = prod_i i^{m_i} m_i!, con m_i la multiplicidad de la parte i."""
    z = 1
    for part, multiplicity in Counter(nu.parts).items():
        z *= part ** multiplicity * math.factorial(multiplicity)
    return z


def class_size(nu: IntegerPartition) -> int:
    """Tamaño de la clase de conjugación de tipo cíclico ν en S_n: n! / z_ν."""
    return math.factorial(nu.n) // centralizer_order(nu)
