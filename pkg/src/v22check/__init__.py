"""Exact verification toolkit for a family of Fano threefolds with a torus action."""

__version__ = "0.1.0"
