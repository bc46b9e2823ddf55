"""
Configuraciones globales para alpha_perm.

Los valores se leen de variables de entorno (con soporte para archivos .env) y,
opcionalmente, de un archivo YAML indicado por ALPHA_PERM_CONFIG. Las variables
de entorno tienen prioridad sobre el archivo YAML.
"""
import os
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

from alpha_perm.utils.error_handling import ConfigurationError

# Cargar variables de entorno
load_dotenv()


def _load_yaml_config(config_path: str) -> Dict[str, Any]:
    """
    Carga el archivo YAML de configuración, si existe.

    Args:
        config_path (str): Ruta del archivo YAML. Vacía si no se usa.

    Returns:
        Dict[str, Any]: Claves de configuración en mayúsculas.
    """
    if not config_path:
        return {}
    try:
        with open(config_path, 'r', encoding='utf-8') as f:
            config = yaml.safe_load(f) or {}
    except FileNotFoundError:
        raise ConfigurationError(f"Archivo de configuración no encontrado: {config_path}")
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Archivo de configuración inválido: {config_path}", e)

    if not isinstance(config, dict):
        raise ConfigurationError("El archivo de configuración debe contener un diccionario")

    # Aplanar secciones: {'guards': {'max_permutation_n': 12}} -> MAX_PERMUTATION_N
    flat: Dict[str, Any] = {}
    for key, value in config.items():
        if isinstance(value, dict):
            for sub_key, sub_value in value.items():
                flat[str(sub_key).upper()] = sub_value
        else:
            flat[str(key).upper()] = value
    return flat


_FILE_CONFIG = _load_yaml_config(os.getenv('ALPHA_PERM_CONFIG', ''))


def _get(name: str, default: Any) -> str:
    env_value = os.getenv(f'ALPHA_PERM_{name}')
    if env_value is not None:
        return env_value
    return str(_FILE_CONFIG.get(name, default))


def _get_int(name: str, default: int) -> int:
    raw = _get(name, default)
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} debe ser un entero, se recibió '{raw}'", e)


def _get_float(name: str, default: float) -> float:
    raw = _get(name, default)
    try:
        return float(raw)
    except ValueError as e:
        raise ConfigurationError(f"{name} debe ser un número, se recibió '{raw}'", e)


# Configuraciones de logging
LOG_LEVEL = _get('LOG_LEVEL', 'WARNING')
LOG_FILE = _get('LOG_FILE', '')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Límites de enumeración (errores explícitos antes del crecimiento exponencial)
MAX_PERMUTATION_N = _get_int('MAX_PERMUTATION_N', 12)
MAX_PARTITION_N = _get_int('MAX_PARTITION_N', 14)
MAX_FULL_PARTITION_SUM_N = _get_int('MAX_FULL_PARTITION_SUM_N', 10)
MAX_PRODUCT_IDENTITY_N = _get_int('MAX_PRODUCT_IDENTITY_N', 7)
MAX_IMMANANT_N = _get_int('MAX_IMMANANT_N', 9)
MAX_COEFFICIENT_SOLVE_N = _get_int('MAX_COEFFICIENT_SOLVE_N', 8)
MAX_IMMANANT_EXPANSION_N = _get_int('MAX_IMMANANT_EXPANSION_N', 8)
MAX_MOBIUS_N = _get_int('MAX_MOBIUS_N', 6)
MAX_CHARACTER_N = _get_int('MAX_CHARACTER_N', 10)
MAX_RENCONTRES_N = _get_int('MAX_RENCONTRES_N', 10)

# Tolerancias numéricas
REL_TOL = _get_float('REL_TOL', 1e-8)
ABS_FLOOR = _get_float('ABS_FLOOR', 1e-10)
SINGULAR_PIVOT_TOL = _get_float('SINGULAR_PIVOT_TOL', 1e-12)
INTEGER_TEST_TOL = _get_float('INTEGER_TEST_TOL', 1e-12)

# Configuraciones del muestreador
DEFAULT_SEED = _get_int('DEFAULT_SEED', 20130501)
DEFAULT_SAMPLES = _get_int('DEFAULT_SAMPLES', 100000)
SAMPLER_CHUNK_SIZE = _get_int('SAMPLER_CHUNK_SIZE', 4096)
HIGH_VARIANCE_THRESHOLD = _get_float('HIGH_VARIANCE_THRESHOLD', 1.0)


# Validaciones de configuración
def validate_config() -> None:
    """
    Valida las configuraciones críticas.

    Raises:
        ConfigurationError: Si algún valor está fuera de rango.
    """
    guards = {
        'MAX_PERMUTATION_N': MAX_PERMUTATION_N,
        'MAX_PARTITION_N': MAX_PARTITION_N,
        'MAX_FULL_PARTITION_SUM_N': MAX_FULL_PARTITION_SUM_N,
        'MAX_PRODUCT_IDENTITY_N': MAX_PRODUCT_IDENTITY_N,
        'MAX_IMMANANT_N': MAX_IMMANANT_N,
        'MAX_COEFFICIENT_SOLVE_N': MAX_COEFFICIENT_SOLVE_N,
        'MAX_IMMANANT_EXPANSION_N': MAX_IMMANANT_EXPANSION_N,
        'MAX_MOBIUS_N': MAX_MOBIUS_N,
        'MAX_CHARACTER_N': MAX_CHARACTER_N,
        'MAX_RENCONTRES_N': MAX_RENCONTRES_N,
        'SAMPLER_CHUNK_SIZE': SAMPLER_CHUNK_SIZE,
        'DEFAULT_SAMPLES': DEFAULT_SAMPLES,
    }
    for name, value in guards.items():
        if value < 1:
            raise ConfigurationError(f"{name} debe ser positivo, se recibió {value}")

    for name, value in {
        'REL_TOL': REL_TOL,
        'ABS_FLOOR': ABS_FLOOR,
        'SINGULAR_PIVOT_TOL': SINGULAR_PIVOT_TOL,
        'INTEGER_TEST_TOL': INTEGER_TEST_TOL,
        'HIGH_VARIANCE_THRESHOLD': HIGH_VARIANCE_THRESHOLD,
    }.items():
        if not value > 0:
            raise ConfigurationError(f"{name} debe ser mayor que cero, se recibió {value}")

    if DEFAULT_SEED < 0:
        raise ConfigurationError("DEFAULT_SEED no puede ser negativo")


# Ejecutar validaciones al importar
validate_config()
