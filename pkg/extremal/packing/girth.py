"""Girth-raising swaps on a packing and the high-girth packing driver."""

from __future__ import annotations

from dataclasses import dataclass, field

from loguru import logger

from extremal.core.errors import InfeasibleParameters, InternalInvariantViolation
from extremal.graphs import INF, Girth, Graph, bfs_distances, count_shortest_cycles, girth
from extremal.graphs import shortest_cycle
from extremal.packing.placement import (
    CombinedGraph,
    Placement,
    combined_graph,
    count_conflicts,
    max_k_bound,
    sauer_spencer_pack,
)


@dataclass(frozen=True, slots=True)
class TraceStep:
    girth: int
    deficit: int
    cycle_count: int
    u: int
    v: int

    @property
    def progress_key(self) -> tuple[int, int]:
        return (self.deficit, self.cycle_count)


@dataclass(slots=True)
class PackingTrace:
    """Per-swap record of the (girth deficit, shortest-cycle count) pair."""

    target: int
    steps: list[TraceStep] = field(default_factory=list)
    final_girth: Girth = INF

    @property
    def iterations(self) -> int:
        return len(self.steps)

    def is_strictly_decreasing(self) -> bool:
        keys = [step.progress_key for step in self.steps]
        return all(later < earlier for earlier, later in zip(keys, keys[1:], strict=False))


def girth_target(g: Girth, k: int, n: int) -> int:
    """``min{g, k}`` with a forest's infinite girth read as ``n + 1``."""
    finite_g = n + 1 if g is INF else g
    return min(finite_g, k)


def _swap_vertex(cycle_vertices: tuple[int, ...], combined: CombinedGraph) -> int | None:
    """First vertex of the cycle whose two cycle edges come from different layers."""
    length = len(cycle_vertices)
    for i, u in enumerate(cycle_vertices):
        before = combined.layer_of(cycle_vertices[i - 1], u)
        after = combined.layer_of(u, cycle_vertices[(i + 1) % length])
        if before != after:
            return u
    return None


def _far_vertex(host: Graph, u: int, k: int) -> int | None:
    distances = bfs_distances(host, u, cutoff=k + 1)
    for v, dv in enumerate(distances):
        if dv is INF or dv >= k + 1:
            return v
    return None


def improve_girth(
    g1: Graph,
    g2: Graph,
    start: Placement,
    g: Girth,
    k: int,
    *,
    trace: PackingTrace | None = None,
) -> Placement:
    """Swap images in f1 until the combined girth reaches ``min{g, k}``.

    Each step takes the lexicographically first shortest cycle C of the
    combined graph, a vertex u of C meeting one edge from each layer, and the
    smallest host vertex v at distance at least k+1 from u; the G1 preimages
    of u and v then exchange images.  The pair (girth deficit, number of
    shortest cycles) must drop at every step.
    """
    n = start.n
    target = girth_target(g, k, n)
    if trace is None:
        trace = PackingTrace(target=target)
    trace.target = target
    placement = start
    if count_conflicts(g1, g2, placement):
        raise InfeasibleParameters("improve_girth needs a valid packing as its start")
    combined = combined_graph(g1, g2, placement)
    current = girth(combined.host)
    if k <= 2:
        trace.final_girth = current
        return placement

    previous: tuple[int, int] | None = None
    while current is not INF and current < target:
        count = count_shortest_cycles(combined.host)
        key = (target - current, count)
        if previous is not None and not key < previous:
            raise InternalInvariantViolation(
                f"swap did not reduce (deficit, cycles): {previous} -> {key}"
            )
        cycle = shortest_cycle(combined.host)
        assert cycle is not None
        u = _swap_vertex(cycle.vertices, combined)
        if u is None:
            raise InternalInvariantViolation(
                f"shortest cycle {cycle.vertices} lies in a single layer below girth {target}"
            )
        v = _far_vertex(combined.host, u, k)
        if v is None:
            raise InternalInvariantViolation(f"no vertex at distance >= {k + 1} from {u}")
        trace.steps.append(TraceStep(girth=current, deficit=key[0], cycle_count=count, u=u, v=v))
        logger.debug(
            "Girth {} with {} shortest cycle(s); swapping host vertices {} and {}",
            current,
            count,
            u,
            v,
        )
        placement = placement.with_f1_swapped(placement.preimage_f1(u), placement.preimage_f1(v))
        combined = combined_graph(g1, g2, placement)
        new_girth = girth(combined.host)
        if new_girth is not INF and new_girth < current:
            raise InternalInvariantViolation(
                f"swap lowered the girth from {current} to {new_girth}"
            )
        previous = key
        current = new_girth
    trace.final_girth = current
    return placement


def pack_high_girth(
    g1: Graph,
    g2: Graph,
    *,
    seed: int = 0,
    max_restarts: int = 64,
    trace: PackingTrace | None = None,
) -> CombinedGraph:
    """Pack two graphs so the combined girth is at least ``min{g, k}``.

    ``g`` is the smaller guest girth and ``k`` comes from :func:`max_k_bound`.
    When ``2 * d1 * d2 >= n`` the guarantee is at most 1 and any packing the
    local search can find is returned unchanged.
    """
    if g1.n != g2.n:
        raise InfeasibleParameters(f"graphs have different vertex counts: {g1.n} vs {g2.n}")
    n = g1.n
    d1, d2 = g1.max_degree(), g2.max_degree()
    k = max_k_bound(d1, d2, n)
    g = min_girth(girth(g1), girth(g2))
    degenerate = 2 * d1 * d2 >= n
    start = sauer_spencer_pack(g1, g2, seed=seed, max_restarts=max_restarts, strict=not degenerate)
    target = girth_target(g, k, n)
    if trace is None:
        trace = PackingTrace(target=target)
    trace.target = target
    placement = start if degenerate else improve_girth(g1, g2, start, g, k, trace=trace)
    combined = combined_graph(g1, g2, placement)
    achieved = girth(combined.host)
    if achieved is not INF and achieved < target:
        raise InternalInvariantViolation(f"combined girth {achieved} below guarantee {target}")
    logger.info(
        "Packed n={} (d1={}, d2={}): k={}, guaranteed girth {}, achieved {}",
        n,
        d1,
        d2,
        k,
        target,
        achieved,
    )
    return CombinedGraph(
        host=combined.host,
        provenance=combined.provenance,
        layer_count=2,
        guaranteed_girth=target,
        k_bound=k,
        placement=placement,
        layer_maps=combined.layer_maps,
    )


def min_girth(a: Girth, b: Girth) -> Girth:
    """Smaller of two possibly infinite girths."""
    if a is INF:
        return b
    if b is INF:
        return a
    return min(a, b)
