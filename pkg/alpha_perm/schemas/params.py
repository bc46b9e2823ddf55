"""
Esquemas para validación de parámetros de entrada.
"""
from typing import Any, Optional

from pydantic import BaseModel, validator

from alpha_perm.utils.error_handling import InadmissibleParamsError, ValidationError

# Tolerancia para reconocer θ = m·(-a) con m entero
_RESTRICTED_TOL = 1e-12


def parse_complex(value: Any) -> complex:
    """
    Convierte un número o una cadena "re" / "re,im" en un complejo.

    Args:
        value (Any): Número (int, float, complex) o cadena.

    Returns:
        complex: El escalar complejo.

    Raises:
        ValidationError: Si el valor no se puede interpretar o no es finito.
    """
    if isinstance(value, str):
        pieces = [p.strip() for p in value.split(',')]
        try:
            if len(pieces) == 1:
                result = complex(float(pieces[0]))
            elif len(pieces) == 2:
                result = complex(float(pieces[0]), float(pieces[1]))
            else:
                raise ValueError(value)
        except ValueError as e:
            raise ValidationError(f"Escalar complejo inválido: '{value}' (use 're' o 're,im')", e)
    else:
        try:
            result = complex(value)
        except (TypeError, ValueError) as e:
            raise ValidationError(f"Escalar complejo inválido: {value!r}", e)

    if result != result or abs(result) == float('inf'):
        raise ValidationError(f"El escalar debe ser finito: {value!r}")
    return result


class _ComplexModel(BaseModel):
    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False
        json_encoders = {complex: lambda z: [z.real, z.imag]}


class PitmanEwensParams(BaseModel):
    """
    Parámetros (a, θ) de la distribución de Pitman-Ewens sobre particiones de conjuntos.

    Regiones admisibles: 0 <= a < 1 con θ > -a, o a < 0 con θ = -m·a para un entero m >= 1
    (en ese caso toda partición muestreada tiene a lo sumo m bloques).
    """

    a: float
    theta: float

    class Config:
        allow_mutation = False

    @property
    def max_blocks(self) -> Optional[int]:
        """m en el régimen restringido (a < 0), None en el régimen no restringido."""
        if self.a >= 0:
            return None
        m = round(self.theta / -self.a)
        if m >= 1 and abs(m * -self.a - self.theta) <= _RESTRICTED_TOL * max(1.0, abs(self.theta)):
            return m
        return None

    @property
    def admissible(self) -> bool:
        if 0 <= self.a < 1:
            return self.theta > -self.a
        return self.a < 0 and self.max_blocks is not None

    def ensure_admissible(self) -> 'PitmanEwensParams':
        """
        Raises:
            InadmissibleParamsError: Si (a, θ) no pertenece a ninguna región admisible.
        """
        if not self.admissible:
            raise InadmissibleParamsError(
                f"Parámetros de Pitman-Ewens no admisibles: a={self.a}, theta={self.theta}"
            )
        return self

    @classmethod
    def ewens(cls, theta: float = 1.0) -> 'PitmanEwensParams':
        return cls(a=0.0, theta=theta)

    @classmethod
    def restricted(cls, k: int) -> 'PitmanEwensParams':
        """Propuesta con a = -1 y θ = k: soporte en particiones con a lo sumo k bloques."""
        return cls(a=-1.0, theta=float(k))


class BlockSpec(_ComplexModel):
    """
    Matriz por bloques A[n1, n2]: la entrada (i, j) vale a_{rs} según el bloque de i y de j.
    """

    a11: complex
    a12: complex
    a21: complex
    a22: complex
    n1: int
    n2: int

    @validator('a11', 'a12', 'a21', 'a22', pre=True)
    def _parse_entry(cls, value: Any) -> complex:
        return parse_complex(value)

    @validator('n1', 'n2')
    def _positive_size(cls, value: int) -> int:
        if value < 1:
            raise ValueError("los tamaños de bloque deben ser >= 1")
        return value

    @property
    def n(self) -> int:
        return self.n1 + self.n2


class HomSymSpec(_ComplexModel):
    """Matriz homogéneamente simétrica H[a, b]: a en la diagonal y b fuera de ella."""

    a: complex
    b: complex
    n: int

    @validator('a', 'b', pre=True)
    def _parse_entry(cls, value: Any) -> complex:
        return parse_complex(value)

    @validator('n')
    def _positive_size(cls, value: int) -> int:
        if value < 1:
            raise ValueError("la dimensión debe ser >= 1")
        return value
