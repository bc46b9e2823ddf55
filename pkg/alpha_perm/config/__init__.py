"""
Paquete de configuración para alpha_perm.

Este módulo gestiona las configuraciones globales: límites de enumeración,
tolerancias numéricas, logging y parámetros del muestreador.
"""

# Importar configuraciones para que estén disponibles al importar el paquete
from . import settings

__all__ = ['settings']
