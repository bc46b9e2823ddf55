"""
Paquete de utilidades para alpha_perm.

Este módulo proporciona herramientas de soporte, logging y manejo de errores.
"""

from .logging import (
    setup_logging,
    get_logger
)
from .error_handling import (
    AlphaPermError,
    ValidationError,
    DimensionMismatchError,
    MatrixParseError,
    InadmissibleParamsError,
    UnsupportedInputError,
    ConfigurationError,
    SizeLimitError,
    ToleranceBreachError,
    SamplerError,
    check_size,
    handle_exceptions
)

__all__ = [
    # Funciones de logging
    'setup_logging',
    'get_logger',

    # Clases de manejo de errores
    'AlphaPermError',
    'ValidationError',
    'DimensionMismatchError',
    'MatrixParseError',
    'InadmissibleParamsError',
    'UnsupportedInputError',
    'ConfigurationError',
    'SizeLimitError',
    'ToleranceBreachError',
    'SamplerError',

    # Decoradores y funciones de manejo de errores
    'check_size',
    'handle_exceptions'
]
