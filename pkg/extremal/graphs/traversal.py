"""Girth, distance, component and domination queries on :class:`Graph`."""

from __future__ import annotations

from collections import deque
from collections.abc import Collection, Iterable

from extremal.graphs.graph import INF, Cycle, Digraph, Distance, Girth, Graph


def bfs_distances(g: Graph, source: int, *, cutoff: int | None = None) -> list[Distance]:
    """Exact shortest-path distances from ``source``; unreachable vertices map to INF.

    With ``cutoff`` the search stops expanding at that depth and farther
    vertices are reported as INF.
    """
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist: list[Distance] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        assert du is not INF
        if cutoff is not None and du >= cutoff:
            continue
        for w in g.adjacency[u]:
            if dist[w] is INF:
                dist[w] = du + 1
                queue.append(w)
    return dist


def girth(g: Graph) -> Girth:
    """Length of a shortest cycle, INF for forests.

    One BFS per root; a non-tree edge met at depth d closes a walk of length
    2d+1 (level edge) or 2d+2 (forward edge), and the search from a root stops
    as soon as no edge at the current depth can beat the best cycle so far.
    """
    best: Girth = INF
    for root in range(g.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = depth[u]
            if best is not INF and 2 * du + 1 >= best:
                break
            for w in g.adjacency[u]:
                if w not in depth:
                    depth[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u] and depth[w] >= du:
                    length = du + depth[w] + 1
                    if best is INF or length < best:
                        best = length
    return best


def _ball(g: Graph, source: int, radius: int, allowed_min: int) -> dict[int, int]:
    depth = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if depth[u] >= radius:
            continue
        for w in g.adjacency[u]:
            if w >= allowed_min and w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    return depth


def _cycle_from(g: Graph, start: int, length: int) -> tuple[int, ...] | None:
    """Lexicographically first cycle of ``length`` through ``start`` using vertices >= start."""
    radius = length // 2
    depth = _ball(g, start, radius, start)
    path = [start]
    on_path = {start}

    def extend() -> bool:
        used = len(path)
        last = path[-1]
        if used == length:
            return g.has_edge(last, start)
        remaining = length - used
        for w in g.adjacency[last]:
            if w <= start or w in on_path:
                continue
            dw = depth.get(w)
            if dw is None or dw > remaining:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            path.pop()
            on_path.discard(w)
        return False

    return tuple(path) if extend() else None


def shortest_cycle(g: Graph) -> Cycle | None:
    """Witness cycle of length girth(g), or None for forests.

    Ties go to the smallest starting vertex, then the lexicographically
    smallest vertex sequence starting there.
    """
    m = girth(g)
    if m is INF:
        return None
    for start in range(g.n):
        found = _cycle_from(g, start, m)
        if found is not None:
            return Cycle(found)
    return None  # pragma: no cover - girth finite implies a witness


def count_shortest_cycles(g: Graph) -> int:
    """Number of distinct cycles whose length equals the girth (0 for forests).

    Relies on shortest paths of length below girth/2 being unique: for odd
    girth 2l+1 each cycle through a root has one edge joining two depth-l
    vertices, for even girth 2l each cycle meets a depth-l vertex from two
    distinct depth-(l-1) parents.
    """
    m = girth(g)
    if m is INF:
        return 0
    half = m // 2
    total = 0
    for root in range(g.n):
        depth = _ball(g, root, half, 0)
        if m % 2 == 1:
            for u, du in depth.items():
                if du != half:
                    continue
                total += sum(1 for w in g.adjacency[u] if w > u and depth.get(w) == half)
        else:
            for u, du in depth.items():
                if du != half:
                    continue
                parents = sum(1 for w in g.adjacency[u] if depth.get(w) == half - 1)
                total += parents * (parents - 1) // 2
    return total // m


def connected_components(g: Graph, within: Collection[int] | None = None) -> list[list[int]]:
    """Maximal connected vertex sets, each sorted, ordered by smallest vertex.

    With ``within`` the components of the induced subgraph on that set are returned.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    parts: list[list[int]] = []
    for start in sorted(allowed):
        if start in seen:
            continue
        seen.add(start)
        part = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    part.append(w)
                    queue.append(w)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is non-empty and induces a connected subgraph."""
    members = set(s)
    return bool(members) and len(connected_components(g, members)) == 1


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside ``s`` has a neighbour in ``s``."""
    members = set(s)
    for v in range(g.n):
        if v in members:
            continue
        if members.isdisjoint(g.neighbor_set(v)):
            return False
    return True


def _directed_cycle_through(d: Digraph, source: int, allowed: Collection[int]) -> Cycle | None:
    parent: dict[int, int] = {source: -1}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in d.successors_of[u]:
            if w == source:
                path = [u]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return Cycle(tuple(reversed(path)), directed=True)
            if w in allowed and w not in parent:
                parent[w] = u
                queue.append(w)
    return None


def shortest_directed_cycle(d: Digraph, within: Collection[int] | None = None) -> Cycle | None:
    """Shortest directed cycle of the subdigraph induced on ``within``, or None if acyclic.

    Ties go to the cycle through the smallest vertex; the cycle starts there.
    """
    allowed = set(range(d.n)) if within is None else set(within)
    best: Cycle | None = None
    for source in sorted(allowed):
        cycle = _directed_cycle_through(d, source, allowed)
        if cycle is not None and (best is None or len(cycle) < len(best)):
            best = cycle
            if len(best) == 2:
                break
    return best


def is_acyclic(d: Digraph, within: Collection[int] | None = None) -> bool:
    """Kahn's algorithm on the subdigraph induced on ``within``."""
    allowed = set(range(d.n)) if within is None else set(within)
    indegree = dict.fromkeys(allowed, 0)
    for u in allowed:
        for w in d.successors_of[u]:
            if w in allowed:
                indegree[w] += 1
    queue = deque(v for v, deg in indegree.items() if deg == 0)
    removed = 0
    while queue:
        u = queue.popleft()
        removed += 1
        for w in d.successors_of[u]:
            if w in allowed:
                indegree[w] -= 1
                if indegree[w] == 0:
                    queue.append(w)
    return removed == len(allowed)
