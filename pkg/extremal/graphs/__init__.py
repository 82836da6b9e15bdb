"""Graph-core: graph types and the queries every other module builds on."""

from .graph import INF, Cycle, Digraph, Distance, Girth, Graph, Infinity, at_least, finite_or
from .io import format_digraph, format_graph, load_digraph, load_graph, parse_edge_list, save_graph
from .traversal import (
    bfs_distances,
    connected_components,
    count_shortest_cycles,
    girth,
    is_acyclic,
    is_connected,
    is_connected_subset,
    is_dominating,
    shortest_cycle,
    shortest_directed_cycle,
)

__all__ = [
    "INF",
    "Infinity",
    "Girth",
    "Distance",
    "Graph",
    "Digraph",
    "Cycle",
    "at_least",
    "finite_or",
    "parse_edge_list",
    "load_graph",
    "load_digraph",
    "format_graph",
    "format_digraph",
    "save_graph",
    "bfs_distances",
    "connected_components",
    "count_shortest_cycles",
    "girth",
    "is_acyclic",
    "is_connected",
    "is_connected_subset",
    "is_dominating",
    "shortest_cycle",
    "shortest_directed_cycle",
]
