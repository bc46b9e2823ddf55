"""
Configuración de logging para alpha_perm.
"""
import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Any, Optional

import structlog


def setup_logging(
    log_level: Optional[str] = None,
    log_file: Optional[str] = None,
    log_format: Optional[str] = None
) -> logging.Logger:
    """
    Configura el sistema de logging.

    Args:
        log_level (Optional[str]): Nivel de logging. Si es None, se usa el configurado en settings.
        log_file (Optional[str]): Ruta del archivo de log. Si es None, se usa el de settings
            (vacío significa solo consola).
        log_format (Optional[str]): Formato de los mensajes de log. Si es None, se usa el
            configurado en settings.

    Returns:
        logging.Logger: Logger raíz configurado.
    """
    from alpha_perm.config import settings

    level = log_level or settings.LOG_LEVEL
    format_str = log_format or settings.LOG_FORMAT
    file_path = settings.LOG_FILE if log_file is None else log_file

    # Convertir nivel de string a constante de logging
    numeric_level = getattr(logging, level.upper(), None)
    if not isinstance(numeric_level, int):
        raise ValueError(f"Nivel de log inválido: {level}")

    logger = logging.getLogger()
    logger.setLevel(numeric_level)

    # Eliminar handlers existentes
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)

    formatter = logging.Formatter(format_str)

    # La salida estándar queda reservada para los resultados de los comandos
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if file_path:
        log_dir = os.path.dirname(file_path)
        if log_dir and not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = RotatingFileHandler(
            file_path,
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5
        )
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    configure_structlog()

    logger.debug("Sistema de logging configurado")
    return logger


def configure_structlog() -> None:
    """
    Configura structlog sobre el logging estándar.

    Los campos enlazados con ``bind`` se renderizan como ``clave=valor`` al final del mensaje.
    """
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.KeyValueRenderer(key_order=['event'], sort_keys=True),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str, **extra: Any) -> Any:
    """
    Obtiene un logger con contexto.

    Args:
        name (str): Nombre del logger.
        **extra: Información extra para añadir a los mensajes.

    Returns:
        structlog.stdlib.BoundLogger: Logger con contexto.
    """
    if not structlog.is_configured():
        configure_structlog()
    return structlog.get_logger(name).bind(**extra)
