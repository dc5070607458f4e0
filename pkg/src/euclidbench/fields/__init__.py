"""Exact ordered-field backends: rationals, constructible reals, and eps-series."""
from .core import (
    CONSTRUCTIBLE,
    NONARCH,
    RAT,
    ConstructibleField,
    Field,
    FieldTag,
    NonArchField,
    Ordering,
    RationalField,
    archimedean_witness,
    classify,
    compare,
    field_arith,
    field_for,
    is_limited,
    parse_value,
    rational_sqrt,
    sign,
    sqrt,
    tag_of,
)
from .series import DEFAULT_WINDOW, MagnitudeClass, Series
from .tower import TowerReal

__all__ = [
    "CONSTRUCTIBLE", "NONARCH", "RAT", "ConstructibleField", "Field", "FieldTag",
    "NonArchField", "Ordering", "RationalField", "archimedean_witness", "classify",
    "compare", "field_arith", "field_for", "is_limited", "parse_value", "rational_sqrt",
    "sign", "sqrt", "tag_of", "DEFAULT_WINDOW", "MagnitudeClass", "Series", "TowerReal",
]
