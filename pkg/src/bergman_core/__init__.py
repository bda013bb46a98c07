"""
Bergman kernels, diastasis functions and Calabi-criterion rigidity diagnostics.
"""

__version__ = "0.1.0"
