"""Small deterministic and seeded graph families used by tests and the CLI."""

from __future__ import annotations

from itertools import combinations

from extremal.core.errors import InfeasibleParameters
from extremal.core.rng import XorShift64Star
from extremal.graphs.graph import Graph


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InfeasibleParameters("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(n: int) -> Graph:
    """K_{n,n} with sides a_i = i and b_j = n + j."""
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def perfect_matching_graph(n: int) -> Graph:
    if n % 2:
        raise InfeasibleParameters("a perfect matching needs an even vertex count")
    return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def random_graph(n: int, p: float, rng: XorShift64Star) -> Graph:
    """Erdos-Renyi G(n, p) with pairs visited in lexicographic order."""
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.bernoulli(p)])


def random_connected_graph(n: int, min_degree: int, rng: XorShift64Star) -> Graph:
    """Random connected graph with minimum degree at least ``min_degree``.

    A shuffled Hamilton path guarantees connectivity; each vertex then gains
    random neighbours until its degree reaches ``min_degree``.
    """
    if min_degree >= n:
        raise InfeasibleParameters("min_degree must be below n")
    order = list(range(n))
    rng.shuffle(order)
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for a, b in zip(order, order[1:], strict=False):
        adjacency[a].add(b)
        adjacency[b].add(a)
    for v in range(n):
        while len(adjacency[v]) < min_degree:
            w = rng.randbelow(n)
            if w != v and w not in adjacency[v]:
                adjacency[v].add(w)
                adjacency[w].add(v)
    return Graph(n, adjacency)
