"""Exact combinatorics and membership oracles for spaces of polynomial
systems with bounded real root multiplicity attached to toric fans."""

__version__ = "0.1.0"
