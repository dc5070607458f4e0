"""Exact-arithmetic workbench for compass-and-straightedge geometry over ordered fields."""
__version__ = "0.1.0"
