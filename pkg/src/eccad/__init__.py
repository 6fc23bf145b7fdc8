"""Cylindrical algebraic decomposition with multiple equational constraints."""

from .poly import Poly, VarOrder, parse_poly

__version__ = "0.1.0"

__all__ = ["Poly", "VarOrder", "parse_poly", "__version__"]
