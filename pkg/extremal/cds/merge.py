"""Turning a dominating set into a connected one within the f_{n,k} budget."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from fractions import Fraction

from loguru import logger

from extremal.cds.budget import component_bound, f_nk
from extremal.core.errors import (
    HostDisconnected,
    InternalInvariantViolation,
    NotDominating,
)
from extremal.graphs import Graph, connected_components, is_connected, is_dominating


def _hub_vertex(g: Graph, components: list[list[int]]) -> tuple[int, int]:
    """Vertex lying in the most closed neighbourhoods of component representatives.

    The representative of a component is its smallest vertex; ties go to the
    smallest vertex index.
    """
    hits = [0] * g.n
    for component in components:
        for u in g.closed_neighborhood(component[0]):
            hits[u] += 1
    best = max(range(g.n), key=lambda u: (hits[u], -u))
    return best, hits[best]


def _bridge_path(g: Graph, members: set[int], source: list[int]) -> list[int]:
    """Interior vertices of a shortest path from ``source`` to another part of ``members``."""
    inside = set(source)
    parent: dict[int, int | None] = {v: None for v in source}
    queue = deque(source)
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in parent:
                continue
            parent[w] = u
            if w in members and w not in inside:
                interior: list[int] = []
                step = parent[w]
                while step is not None and step not in inside:
                    interior.append(step)
                    step = parent[step]
                return interior
            queue.append(w)
    raise HostDisconnected("dominating set components cannot be joined")


def merge_components(g: Graph, s: Iterable[int]) -> set[int]:
    """Add vertices to the dominating set ``s`` until it induces a connected subgraph.

    While the component count x exceeds ``n / (k + 1)`` the vertex covering
    the most representative neighbourhoods is added, merging at least
    ``ceil((k + 1) x / n)`` components.  Below that threshold the component
    holding the smallest vertex is joined to its nearest other component
    through at most two new vertices.  At most ``f_nk(n, k, x)`` vertices
    are added in total.
    """
    members = set(s)
    if not members:
        raise NotDominating("the empty set dominates nothing")
    if not is_connected(g):
        raise HostDisconnected("merge_components needs a connected host graph")
    if not is_dominating(g, members):
        raise NotDominating("input set does not dominate the graph")
    n, k = g.n, g.min_degree()
    components = connected_components(g, members)
    initial_size, initial_count = len(members), len(components)
    if initial_count > component_bound(g, members):
        raise InternalInvariantViolation(
            f"{initial_count} components exceed the degree bound {component_bound(g, members)}"
        )
    budget = f_nk(n, k, initial_count)
    threshold = Fraction(n, k + 1)
    while len(components) > 1:
        hub, hits = _hub_vertex(g, components)
        if len(components) > threshold and hits >= 2:
            if hub in members:
                raise InternalInvariantViolation(f"hub vertex {hub} already in the set")
            members.add(hub)
            logger.debug("Hub {} joins {} of {} components", hub, hits, len(components))
        else:
            added = _bridge_path(g, members, components[0])
            members.update(added)
            logger.debug("Bridge {} joins component of {}", added, components[0][0])
        components = connected_components(g, members)
    if len(members) - initial_size > budget:
        raise InternalInvariantViolation(
            f"added {len(members) - initial_size} vertices, budget f({initial_count}) = {budget}"
        )
    return members


def greedy_dominating_set(g: Graph) -> set[int]:
    """Repeatedly take the vertex dominating the most undominated vertices.

    Ties go to the smallest vertex index.
    """
    undominated = set(range(g.n))
    chosen: set[int] = set()
    while undominated:
        best = max(
            range(g.n),
            key=lambda v: (len(undominated.intersection(g.closed_neighborhood(v))), -v),
        )
        chosen.add(best)
        undominated.difference_update(g.closed_neighborhood(best))
    return chosen
