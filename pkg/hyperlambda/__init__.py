"""Lagrangians of r-uniform hypergraphs, extremal search and proof-envelope checks."""
__version__ = "1.0.0"
