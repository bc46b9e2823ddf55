"""
Esquemas de validación (pydantic) para parámetros y resultados.
"""

from .params import (
    parse_complex,
    PitmanEwensParams,
    BlockSpec,
    HomSymSpec
)
from .results import (
    Method,
    AlphaPermanentResult,
    EstimateReport,
    SuiteReport,
    RunResult
)

__all__ = [
    'parse_complex',
    'PitmanEwensParams',
    'BlockSpec',
    'HomSymSpec',
    'Method',
    'AlphaPermanentResult',
    'EstimateReport',
    'SuiteReport',
    'RunResult'
]
