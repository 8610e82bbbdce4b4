"""Exact Laurent-polynomial kernel and checkers for the exceptional-unit cubic family."""

from .core import BiPoly, DegreeError, LaurentPoly, TriPoly, binomial
from .families import ParityCase, SignConvention

__version__ = "0.1.0"

__all__ = ["BiPoly", "DegreeError", "LaurentPoly", "TriPoly", "binomial", "ParityCase", "SignConvention"]
