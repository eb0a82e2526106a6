"""Exact computations with braidings, quantum matrix algebras and braided Yangians."""

from .scalars import QRat, qrat
from .symmetries import Symmetry, SymmetryError, make_symmetry

__version__ = "0.1.0"

__all__ = ["QRat", "qrat", "Symmetry", "SymmetryError", "make_symmetry", "__version__"]
