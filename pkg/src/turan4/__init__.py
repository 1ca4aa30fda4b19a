"""Turan numbers and densities of 4-uniform hypergraphs."""

__version__ = "0.1.0"
