"""Exact length and excess combinatorics in finite Coxeter groups."""

from .signedperm import (
    SignedCycleType,
    SignedPermutation,
    all_cycle_types,
    all_elements,
    format_cycles,
    format_window,
    parse_cycle_type,
    parse_element,
)

__version__ = "0.1.0"

__all__ = [
    "SignedCycleType",
    "SignedPermutation",
    "all_cycle_types",
    "all_elements",
    "format_cycles",
    "format_window",
    "parse_cycle_type",
    "parse_element",
    "__version__",
]
