"""
Utilidades para manejo de errores.
"""
import functools
import logging
import sys
import traceback
from typing import Any, Callable, List, Optional, Type, Union

logger = logging.getLogger(__name__)


class AlphaPermError(Exception):
    """
    Excepción base para errores de alpha_perm.

    Cada familia de errores define el código de salida que usa la CLI.
    """

    exit_code = 1

    def __init__(self, message: str, original_error: Optional[Exception] = None):
        """
        Inicializa la excepción.

        Args:
            message (str): Mensaje de error.
            original_error (Optional[Exception]): Excepción original que causó el error.
        """
        super().__init__(message)
        self.original_error = original_error
        self.traceback = traceback.format_exc() if original_error else None


class ValidationError(AlphaPermError):
    """
    Error de validación de objetos del dominio (matrices, particiones, permutaciones).
    """

    exit_code = 2


class DimensionMismatchError(ValidationError):
    """
    Dimensiones incompatibles entre matrices, particiones o permutaciones.
    """
    pass


class MatrixParseError(AlphaPermError):
    """
    Error al leer un archivo de matriz.
    """

    exit_code = 2


class InadmissibleParamsError(AlphaPermError):
    """
    Parámetros de Pitman-Ewens fuera de la región admisible.
    """

    exit_code = 2


class UnsupportedInputError(AlphaPermError):
    """
    Entrada fuera del dominio de una fórmula cerrada.
    """

    exit_code = 2


class ConfigurationError(AlphaPermError):
    """
    Error de configuración.
    """

    exit_code = 2


class SizeLimitError(AlphaPermError):
    """
    La dimensión supera el límite de enumeración configurado.
    """

    exit_code = 3


class ToleranceBreachError(AlphaPermError):
    """
    Una identidad o un fixture no se verifica dentro de la tolerancia.
    """

    exit_code = 1


class SamplerError(AlphaPermError):
    """
    Fallo del muestreador (probabilidad de propuesta nula para una muestra).
    """

    exit_code = 1


def check_size(n: int, limit: int, operation: str) -> None:
    """
    Verifica que una dimensión no supere el límite de enumeración.

    Args:
        n (int): Dimensión solicitada.
        limit (int): Límite máximo admitido.
        operation (str): Nombre de la operación, para el mensaje de error.

    Raises:
        SizeLimitError: Si n > limit.
    """
    if n > limit:
        raise SizeLimitError(f"{operation}: n={n} supera el límite de {limit}")


def handle_exceptions(
    error_types: Optional[Union[Type[Exception], List[Type[Exception]]]] = None,
    default_message: str = "Se produjo un error inesperado",
    log_level: int = logging.ERROR,
    exit_on_error: bool = True
) -> Callable:
    """
    Decorador para manejar excepciones en comandos.

    Args:
        error_types (Optional[Union[Type[Exception], List[Type[Exception]]]]): Tipos de excepciones
            a manejar. Si es None, maneja AlphaPermError.
        default_message (str): Mensaje por defecto para errores sin texto.
        log_level (int): Nivel de logging para los errores.
        exit_on_error (bool): Si se debe terminar el proceso con el código de salida del error.
            Si es False, la excepción se relanza después de registrarla.

    Returns:
        Callable: Decorador configurado.
    """
    if error_types is None:
        error_types = [AlphaPermError]
    elif not isinstance(error_types, list):
        error_types = [error_types]

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)
            except Exception as e:
                if not any(isinstance(e, t) for t in error_types):
                    raise

                error_message = str(e) or default_message
                tb_str = ''.join(traceback.format_exception(*sys.exc_info()))
                logger.log(log_level, f"Error en {func.__name__}: {error_message}")
                logger.debug(tb_str)

                if not exit_on_error:
                    raise

                print(f"error: {error_message}", file=sys.stderr)
                sys.exit(getattr(e, 'exit_code', 1))

        return wrapper

    return decorator
