"""
Interfaz de línea de comandos de alpha_perm.
"""
