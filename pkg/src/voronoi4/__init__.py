"""Exact cone combinatorics and torus-orbit cohomology for the genus-4 fans."""

__version__ = "0.1.0"
