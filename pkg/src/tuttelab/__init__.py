"""Exact matroid and Tutte-polynomial workbench."""

__version__ = "0.1.0"
