"""Exact computer algebra for the Casas-Alvero conjecture: Hasse-Schmidt
derivations, higher discriminants, Groebner bases and search drivers."""

__version__ = "0.1.0"

from .fields import GF, QQ, field_from_spec
from .poly import MPoly, ParseError, RingHom, UPoly, apply_hom, format_poly, parse_poly, upoly_gcd

__all__ = [
    "GF",
    "QQ",
    "field_from_spec",
    "MPoly",
    "UPoly",
    "RingHom",
    "ParseError",
    "apply_hom",
    "format_poly",
    "parse_poly",
    "upoly_gcd",
]
