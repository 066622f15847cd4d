"""Finite topological quandles: homology, cocycles and state sums."""

from ._core import (
    Diagram,
    DomainError,
    Quandle,
    StructureError,
    chain_ranks,
    characteristic_cochain,
    coboundaries,
    cocycles,
    cohomology,
    coloring_count,
    colorings,
    full_h0,
    homology,
    is_cocycle,
    state_sum,
)

__all__ = [
    "Diagram",
    "DomainError",
    "Quandle",
    "StructureError",
    "chain_ranks",
    "characteristic_cochain",
    "coboundaries",
    "cocycles",
    "cohomology",
    "coloring_count",
    "colorings",
    "full_h0",
    "homology",
    "is_cocycle",
    "state_sum",
]
