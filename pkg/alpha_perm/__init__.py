"""
Paquete principal de alpha_perm.

Cálculo exacto y por Monte Carlo del α-permanente de matrices complejas, con
evaluadores para sus identidades de descomposición, fórmulas cerradas para matrices
estructuradas y el desarrollo en inmanantes.
"""

# Importar submódulos principales
from . import config
from . import utils
from . import schemas
from . import combinatorics
from . import exact
from . import special
from . import immanants
from . import sampler

# Información del paquete
__version__ = "0.1.0"
__license__ = "MIT"

__all__ = [
    'config',
    'utils',
    'schemas',
    'combinatorics',
    'exact',
    'special',
    'immanants',
    'sampler',
    'initialize'
]


def initialize(verbose: bool = False) -> None:
    """
    Inicializa el paquete: valida la configuración y configura el logging.

    Args:
        verbose (bool): Si es True, el nivel de logging pasa a DEBUG.
    """
    config.settings.validate_config()
    utils.setup_logging(log_level='DEBUG' if verbose else None)

    logger = utils.get_logger(__name__)
    logger.debug(f"Inicializando alpha_perm v{__version__}")
