"""Exact q-series toolkit for partition k-tuples with distinct odd parts."""

from .pseries import Series, make

__version__ = "0.1.0"

__all__ = ["Series", "make", "__version__"]
