"""Repeated packing of Hamilton cycles into a high-girth regular graph."""

from __future__ import annotations

from loguru import logger

from extremal.core.errors import InfeasibleParameters
from extremal.graphs import INF, Girth, Graph, girth, is_connected
from extremal.graphs.generators import cycle_graph
from extremal.packing.girth import PackingTrace, min_girth, pack_high_girth
from extremal.packing.placement import CombinedGraph, Edge


def is_hamilton_cycle(g: Graph) -> bool:
    """True iff the edges of ``g`` form one cycle through all of its vertices."""
    if g.n < 3 or g.edge_count != g.n:
        return False
    return all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def hamilton_union_high_girth(
    n: int,
    d: int,
    *,
    seed: int = 0,
    max_restarts: int = 64,
    traces: list[PackingTrace] | None = None,
) -> CombinedGraph:
    """Pack ``d`` Hamilton cycles on ``n`` vertices into a 2d-regular high-girth graph.

    Starts from the cycle 0..n-1 and packs one more copy of C_n against the
    union built so far, ``d - 1`` times.  Layer 0 is the starting cycle.
    """
    if d < 1:
        raise InfeasibleParameters("at least one Hamilton layer is required")
    if n < 3:
        raise InfeasibleParameters("a Hamilton cycle needs n >= 3")
    if d > 1 and 8 * (d - 1) >= n:
        raise InfeasibleParameters(
            f"n={n} too small: packing layer {d} needs 2 * {2 * (d - 1)} * 2 < n"
        )
    cycle = cycle_graph(n)
    provenance: dict[Edge, int] = {edge: 0 for edge in cycle.edges()}
    union = cycle
    guaranteed: Girth = INF
    k_bound = n
    for layer in range(1, d):
        trace = PackingTrace(target=0)
        packed = pack_high_girth(
            union, cycle, seed=seed ^ layer, max_restarts=max_restarts, trace=trace
        )
        if traces is not None:
            traces.append(trace)
        assert packed.placement is not None
        f1 = packed.placement.f1
        relabelled: dict[Edge, int] = {}
        for (u, v), tag in provenance.items():
            a, b = f1[u], f1[v]
            relabelled[(a, b) if a < b else (b, a)] = tag
        for edge, tag in packed.provenance.items():
            if tag == 1:
                relabelled[edge] = layer
        provenance = relabelled
        union = packed.host
        k_bound = min(k_bound, packed.k_bound)
        guaranteed = min_girth(guaranteed, packed.guaranteed_girth)
        logger.debug("Layer {} packed; combined girth {}", layer, girth(union))
    if d == 1:
        guaranteed = n
    logger.info("Hamilton union n={} d={} has guaranteed girth {}", n, d, guaranteed)
    return CombinedGraph(
        host=union,
        provenance=provenance,
        layer_count=d,
        guaranteed_girth=guaranteed,
        k_bound=k_bound,
    )
