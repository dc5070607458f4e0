"""A small straight-line language for compass-and-straightedge constructions."""
from .ast import MACROS, PREDICATES, SELECTORS, Script
from .interp import (
    AssertFailed,
    AssertHeld,
    Bound,
    ConstructionFailed,
    Ray,
    Segment,
    Span,
    Step,
    Trace,
    execute,
)
from .macros import macro_expand
from .parser import parse, parse_file

__all__ = [
    "MACROS", "PREDICATES", "SELECTORS", "Script",
    "AssertFailed", "AssertHeld", "Bound", "ConstructionFailed", "Ray", "Segment", "Span",
    "Step", "Trace", "execute", "macro_expand", "parse", "parse_file",
]
