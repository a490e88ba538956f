"""Exact moments of Chebyshev values over elliptic curves with a prescribed subgroup."""

from .kernel import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
