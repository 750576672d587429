"""Exact computer algebra for a family of E7-related deformations.

Subpackages: exact scalar/polynomial arithmetic (fields, poly, linalg),
Groebner-based local algebra (groebner), ADE germ classification
(singclass), root-system and parameter tables (e7family), the elimination
discriminant (discrim), the algebraic WDVV potential (wdvv), and a CLI (cli).
"""

from .fields import QQ, QW, QC7, ExtField, FieldElem
from .poly import MPoly, Ring, parse_poly

__all__ = ["QQ", "QW", "QC7", "ExtField", "FieldElem", "MPoly", "Ring", "parse_poly"]

__version__ = "0.1.0"
