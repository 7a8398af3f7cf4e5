"""Exact-arithmetic toolkit for convex polygons with parallel opposite sides."""

__version__ = "0.1.0"
