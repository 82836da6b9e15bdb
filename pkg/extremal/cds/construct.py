"""Randomized and derandomized connected dominating sets, plus the extremal family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext

from loguru import logger

from extremal.cds.budget import component_bound, domination_bounds
from extremal.cds.merge import greedy_dominating_set, merge_components
from extremal.cds.potential import (
    Decision,
    Number,
    PsiArithmetic,
    PsiTracker,
    selection_probability,
)
from extremal.core.errors import HostDisconnected, InfeasibleParameters, InternalInvariantViolation
from extremal.core.rng import XorShift64Star
from extremal.graphs import Graph, connected_components, is_connected, is_connected_subset
from extremal.graphs import is_dominating


@dataclass(frozen=True, slots=True)
class CdsResult:
    algorithm: str
    k: int
    dominating_set: tuple[int, ...]
    connected_set: tuple[int, ...]
    components_before: int
    bound: float
    psi_history: tuple[Number, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.connected_set)


def _require_host(g: Graph) -> int:
    if not is_connected(g):
        raise HostDisconnected("a connected host graph is required")
    k = g.min_degree()
    if k < 1:
        raise InfeasibleParameters("minimum degree must be at least 1")
    return k


def _undominated(g: Graph, t: set[int]) -> set[int]:
    return {v for v in range(g.n) if v not in t and t.isdisjoint(g.neighbor_set(v))}


def _finish(
    g: Graph, algorithm: str, k: int, s: set[int], history: tuple[Number, ...]
) -> CdsResult:
    components = len(connected_components(g, s))
    connected = merge_components(g, s)
    if not (is_dominating(g, connected) and is_connected_subset(g, connected)):
        raise InternalInvariantViolation(f"{algorithm} produced an invalid dominating set")
    return CdsResult(
        algorithm=algorithm,
        k=k,
        dominating_set=tuple(sorted(s)),
        connected_set=tuple(sorted(connected)),
        components_before=components,
        bound=domination_bounds(g.n, k).connected,
        psi_history=history,
    )


def randomized_cds(g: Graph, seed: int) -> CdsResult:
    """T keeps each vertex with probability ``ln(k+1)/(k+1)``; S = T plus the vertices T misses.

    The expected size of the merged set is at most ``n (ln(k+1) + 4) / (k+1) - 2``.
    """
    k = _require_host(g)
    p = math.log(k + 1) / (k + 1)
    rng = XorShift64Star(seed)
    t = {v for v in range(g.n) if rng.bernoulli(p)}
    s = t | _undominated(g, t)
    return _finish(g, "randomized", k, s, ())


def derandomized_cds(
    g: Graph,
    *,
    arithmetic: PsiArithmetic = PsiArithmetic.FLOAT,
    precision: int = 40,
    p_bits: int = 40,
    slack: float = 1e-9,
) -> CdsResult:
    """Decide T vertex by vertex, keeping the branch with the smaller potential.

    The potential never increases, so the merged set ends within
    ``n (ln(k+1) + 4) / (k+1) - 2``.  Decimal evaluation allows ``slack`` per
    step; the rational mode allows none.
    """
    k = _require_host(g)
    bound = domination_bounds(g.n, k).connected
    with localcontext() as ctx:
        ctx.prec = precision
        p = selection_probability(k, arithmetic, precision=precision, p_bits=p_bits)
        tolerance: Number = Decimal(slack) if arithmetic is PsiArithmetic.FLOAT else p * 0
        tracker = PsiTracker(g, p)
        current = tracker.potential().total
        if current > bound + slack:
            raise InternalInvariantViolation(f"initial potential {current} exceeds bound {bound}")
        history: list[Number] = [current]
        for v in range(g.n):
            included = tracker.evaluate(v, Decision.IN_T).total
            excluded = tracker.evaluate(v, Decision.NOT_IN_T).total
            decision = Decision.IN_T if included < excluded else Decision.NOT_IN_T
            chosen = min(included, excluded)
            if chosen > current + tolerance:  # type: ignore[operator]
                raise InternalInvariantViolation(
                    f"potential rose from {current} to {chosen} at vertex {v}"
                )
            tracker.commit(v, decision)
            current = chosen
            history.append(current)
    t = set(tracker.state.members())
    s = t | _undominated(g, t)
    logger.debug(
        "Derandomized stage: |T|={}, |S|={}, D(H)={}, final potential {}",
        len(t),
        len(s),
        component_bound(g, s),
        current,
    )
    result = _finish(g, f"derandomized-{arithmetic}", k, s, tuple(history))
    if result.size > float(current) + slack or result.size > bound + slack:
        raise InternalInvariantViolation(
            f"connected set of size {result.size} exceeds potential {current} or bound {bound}"
        )
    return result


def greedy_cds(g: Graph) -> CdsResult:
    """Greedy dominating set joined up by :func:`merge_components`."""
    k = _require_host(g)
    return _finish(g, "greedy", k, greedy_dominating_set(g), ())


def gen_cycle_of_cliques(k: int, m: int) -> Graph:
    """m copies of K_{k+1} minus an edge x_i y_i, linked cyclically by edges y_i x_{i+1}.

    Clique i occupies vertices ``i(k+1) .. i(k+1)+k`` with ``x_i`` first and
    ``y_i`` last.  The result is connected and k-regular.
    """
    if k < 2 or m < 2:
        raise InfeasibleParameters("cycle of cliques needs k >= 2 and m >= 2")
    size = k + 1
    edges: list[tuple[int, int]] = []
    for i in range(m):
        base = i * size
        x_i, y_i = base, base + k
        for a in range(base, base + size):
            for b in range(a + 1, base + size):
                if (a, b) != (x_i, y_i):
                    edges.append((a, b))
        x_next = ((i + 1) % m) * size
        edges.append((y_i, x_next))
    return Graph.from_edges(m * size, edges)
