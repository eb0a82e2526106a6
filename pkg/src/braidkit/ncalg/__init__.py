"""Noncommutative algebra: polynomials, presentations, ideal membership and
quantum symmetric polynomials of the RTT / RE / modified RE algebras."""

from .poly import ONE_POLY, ZERO_POLY, Alphabet, NCPoly, parse_ncpoly

__all__ = ["Alphabet", "NCPoly", "ONE_POLY", "ZERO_POLY", "parse_ncpoly"]
