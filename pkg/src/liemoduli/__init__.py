"""Exact-arithmetic engine for the moduli catalog of complex Lie algebras
of dimensions 3 to 5: cohomology, extensions, symmetries and truncated
versal deformations."""

from .scalar import Polynomial, Scalar, Matrix, parse_scalar, poly_eval
from .cochain import BasisTerm, Cochain, Codifferential, BasisChange
from .cochain import nr_bracket, coboundary, jacobi_check, transform

__all__ = [
    "Polynomial", "Scalar", "Matrix", "parse_scalar", "poly_eval",
    "BasisTerm", "Cochain", "Codifferential", "BasisChange",
    "nr_bracket", "coboundary", "jacobi_check", "transform",
]
