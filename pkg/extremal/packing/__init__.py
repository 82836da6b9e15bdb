"""Girth-preserving graph packing."""

from .girth import PackingTrace, TraceStep, girth_target, improve_girth, min_girth, pack_high_girth
from .hamilton import hamilton_union_high_girth, is_hamilton_cycle
from .placement import (
    CombinedGraph,
    Placement,
    combined_graph,
    count_conflicts,
    max_k_bound,
    sauer_spencer_pack,
)

__all__ = [
    "CombinedGraph",
    "PackingTrace",
    "Placement",
    "TraceStep",
    "combined_graph",
    "count_conflicts",
    "girth_target",
    "hamilton_union_high_girth",
    "improve_girth",
    "is_hamilton_cycle",
    "max_k_bound",
    "min_girth",
    "pack_high_girth",
    "sauer_spencer_pack",
]
