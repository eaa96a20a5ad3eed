"""Exact lattice constructions from ternary codes, with enumeration-based checks."""

__version__ = "0.1.0"
