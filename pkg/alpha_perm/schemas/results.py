"""
Esquemas de los resultados que producen la biblioteca y la CLI.
"""
import hashlib
import json
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, root_validator, validator

from alpha_perm.schemas.params import PitmanEwensParams, parse_complex


class Method(str, Enum):
    """Motores exactos disponibles."""

    DEFINITION = 'definition'
    COFACTOR = 'cofactor'
    DET_DECOMPOSITION = 'det_decomposition'


class AlphaPermanentResult(BaseModel):
    """
    Valor de un α-permanente junto con el motor usado y el número de términos evaluados.
    """

    value: complex
    method: Method
    terms_evaluated: int

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False
        json_encoders = {complex: lambda z: [z.real, z.imag]}

    @validator('value', pre=True)
    def _parse_value(cls, value: Any) -> complex:
        return parse_complex(value)


class EstimateReport(BaseModel):
    """
    Estimación de Monte Carlo con su error estándar.

    ``params`` es None para la línea base de permutaciones uniformes.
    """

    estimate: float
    stderr: float = Field(..., ge=0)
    n_samples: int
    seed: int
    target_alpha: float
    proposal: str
    params: Optional[PitmanEwensParams] = None
    relative_stderr: Optional[float] = None

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _fill_relative_stderr(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        if values.get('relative_stderr') is None:
            estimate = values['estimate']
            values['relative_stderr'] = (
                values['stderr'] / abs(estimate) if estimate != 0 else float('inf')
            )
        return values


class SuiteReport(BaseModel):
    """
    Resultado de una batería de verificación de identidades.
    """

    suite: str
    n: int
    trials: int
    seed: int
    tolerance: float
    checks: int = 0
    max_relative_error: float = 0.0
    worst_case: str = ''
    failures: List[str] = []

    @property
    def passed(self) -> bool:
        return not self.failures


class RunResult(BaseModel):
    """
    Registro de una ejecución de la CLI: comando, entradas, salidas y (opcionalmente) tiempo.

    La serialización usa claves ordenadas para que la salida sea determinista.
    """

    command: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any] = {}
    errors: List[str] = []
    wall_time: Optional[float] = None

    @property
    def inputs_digest(self) -> str:
        """SHA-256 de las entradas serializadas con claves ordenadas."""
        payload = json.dumps(self.inputs, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    def to_json(self) -> str:
        data = self.dict(exclude_none=True)
        data['inputs_digest'] = self.inputs_digest
        return json.dumps(data, sort_keys=True, indent=2, default=_json_default)


def _json_default(value: Any) -> Any:
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, BaseModel):
        return value.dict()
    raise TypeError(f"Tipo no serializable: {type(value).__name__}")
