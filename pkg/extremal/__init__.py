"""Extremal toolkit - constructive combinatorics with exact brute-force oracles."""

__version__ = "0.1.0"

from extremal.cds import derandomized_cds, gen_cycle_of_cliques, greedy_cds, randomized_cds
from extremal.coalition import (
    CoalitionInstance,
    break_coalition,
    coalition_construct,
    verify_coalition_success,
)
from extremal.core import ExtremalConfig, ExtremalError, XorShift64Star, load_config
from extremal.fair import EdgePartition, local_search
from extremal.graphs import INF, Digraph, Graph, girth
from extremal.packing import hamilton_union_high_girth, pack_high_girth
from extremal.prob import hamming_center, kpn_bruteforce, median_check

__all__ = [
    "ExtremalConfig",
    "ExtremalError",
    "load_config",
    "XorShift64Star",
    "Graph",
    "Digraph",
    "INF",
    "girth",
    "pack_high_girth",
    "hamilton_union_high_girth",
    "EdgePartition",
    "local_search",
    "derandomized_cds",
    "randomized_cds",
    "greedy_cds",
    "gen_cycle_of_cliques",
    "CoalitionInstance",
    "break_coalition",
    "coalition_construct",
    "verify_coalition_success",
    "hamming_center",
    "kpn_bruteforce",
    "median_check",
]
