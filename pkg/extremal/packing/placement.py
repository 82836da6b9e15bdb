"""Placements of two guest graphs on a shared host vertex set.

A placement is a pair of bijections ``f1: V(G1) -> [n]`` and
``f2: V(G2) -> [n]``; it is a packing when the two image edge sets are
disjoint.  :func:`sauer_spencer_pack` finds one by conflict-eliminating local
search, which always makes progress while ``2 * d1 * d2 < n``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from loguru import logger

from extremal.core.errors import InfeasibleParameters, PackingInfeasibleHint, PreconditionError
from extremal.core.rng import XorShift64Star
from extremal.graphs import INF, Girth, Graph

Edge = tuple[int, int]


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def max_k_bound(d1: int, d2: int, n: int) -> int:
    """Largest k with ``1 + D + D(D-1) + ... + D(D-1)^(k-1) < n`` where ``D = d1 + d2``.

    Returns 0 when even the k=1 sum reaches n.  When ``D <= 1`` the sum never
    grows past 2, so every k qualifies and ``n`` is returned as a cap.
    """
    degree = d1 + d2
    total = 1 + degree
    if total >= n:
        return 0
    if degree <= 1:
        return n
    k = 1
    term = degree
    while True:
        term *= degree - 1
        if total + term >= n:
            return k
        total += term
        k += 1


@dataclass(frozen=True, slots=True)
class Placement:
    """Two bijections onto the host vertex set ``0..n-1``."""

    f1: tuple[int, ...]
    f2: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.f1)
        if len(self.f2) != n:
            raise InfeasibleParameters("placement maps have different sizes")
        for name, mapping in (("f1", self.f1), ("f2", self.f2)):
            if sorted(mapping) != list(range(n)):
                raise PreconditionError(f"{name} is not a bijection onto 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.f1)

    @classmethod
    def identity(cls, n: int) -> Placement:
        ident = tuple(range(n))
        return cls(ident, ident)

    def with_f1_swapped(self, a: int, b: int) -> Placement:
        """Exchange the images of guest vertices ``a`` and ``b`` of G1."""
        f1 = list(self.f1)
        f1[a], f1[b] = f1[b], f1[a]
        return Placement(tuple(f1), self.f2)

    def preimage_f1(self, host_vertex: int) -> int:
        return self.f1.index(host_vertex)


@dataclass(frozen=True, slots=True)
class CombinedGraph:
    """Union of placed layers with the layer index each host edge came from."""

    host: Graph
    provenance: Mapping[Edge, int]
    layer_count: int
    guaranteed_girth: Girth = INF
    k_bound: int = 0
    placement: Placement | None = None
    layer_maps: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    def layer(self, index: int) -> Graph:
        """The host-labelled edges of one layer as a graph on the full host vertex set."""
        return Graph.from_edges(
            self.host.n, [edge for edge, tag in self.provenance.items() if tag == index]
        )

    def layer_of(self, u: int, v: int) -> int:
        return self.provenance[_key(u, v)]


def image_edges(g: Graph, mapping: Sequence[int]) -> set[Edge]:
    return {_key(mapping[u], mapping[v]) for u, v in g.edges()}


def count_conflicts(g1: Graph, g2: Graph, placement: Placement) -> int:
    """Number of host edges hit by both images; zero exactly for a packing."""
    return len(image_edges(g1, placement.f1) & image_edges(g2, placement.f2))


def combined_graph(g1: Graph, g2: Graph, placement: Placement) -> CombinedGraph:
    if g1.n != g2.n or placement.n != g1.n:
        raise InfeasibleParameters(
            f"vertex counts differ: g1={g1.n}, g2={g2.n}, placement={placement.n}"
        )
    first = image_edges(g1, placement.f1)
    second = image_edges(g2, placement.f2)
    shared = first & second
    if shared:
        raise PreconditionError(f"placement is not a packing; {len(shared)} host edges collide")
    provenance: dict[Edge, int] = {edge: 0 for edge in first}
    provenance.update({edge: 1 for edge in second})
    host = Graph.from_edges(g1.n, sorted(provenance))
    return CombinedGraph(
        host=host,
        provenance=provenance,
        layer_count=2,
        placement=placement,
        layer_maps=(placement.f1, placement.f2),
    )


class _ConflictSearch:
    """Mutable state of one local-search restart with f2 fixed to the identity."""

    def __init__(self, g1: Graph, forbidden: set[Edge], f1: list[int]) -> None:
        self.g1 = g1
        self.forbidden = forbidden
        self.f1 = f1

    def conflicting(self, a: int, b: int) -> bool:
        return _key(self.f1[a], self.f1[b]) in self.forbidden

    def total(self) -> int:
        return sum(1 for a, b in self.g1.edges() if self.conflicting(a, b))

    def local(self, a: int, b: int) -> int:
        seen: set[Edge] = set()
        count = 0
        for x in (a, b):
            for y in self.g1.adjacency[x]:
                edge = _key(x, y)
                if edge in seen:
                    continue
                seen.add(edge)
                count += self.conflicting(x, y)
        return count

    def swap(self, a: int, b: int) -> None:
        self.f1[a], self.f1[b] = self.f1[b], self.f1[a]

    def first_conflict(self) -> Edge | None:
        for a, b in self.g1.edges():
            if self.conflicting(a, b):
                return (a, b)
        return None

    def improve(self, a: int, offset: int) -> bool:
        """Swap ``a`` with the first partner (scanning from ``offset``) that lowers the count."""
        n = self.g1.n
        for step in range(n):
            w = (offset + step) % n
            if w == a:
                continue
            before = self.local(a, w)
            self.swap(a, w)
            if self.local(a, w) < before:
                return True
            self.swap(a, w)
        return False


def sauer_spencer_pack(
    g1: Graph,
    g2: Graph,
    *,
    seed: int = 0,
    max_restarts: int = 64,
    strict: bool = True,
) -> Placement:
    """Find a packing of ``g1`` and ``g2`` by conflict-reducing swaps in f1.

    Each restart draws a random f1 from the sub-seed ``seed ^ restart`` and
    keeps f2 as the identity.  While a conflicting edge ``ab`` exists, the
    images of ``a`` (then ``b``) are swapped with the first vertex that lowers
    the conflict count.  A restart ends when no such swap exists.

    With ``strict`` the degree condition ``2 * d1 * d2 < n`` is enforced up
    front; otherwise the search is attempted anyway.
    """
    if g1.n != g2.n:
        raise InfeasibleParameters(f"graphs have different vertex counts: {g1.n} vs {g2.n}")
    n = g1.n
    d1, d2 = g1.max_degree(), g2.max_degree()
    if d1 == 0 or d2 == 0:
        return Placement.identity(n)
    if strict and 2 * d1 * d2 >= n:
        raise PackingInfeasibleHint(
            f"2*d1*d2 = {2 * d1 * d2} >= n = {n}; a packing is not guaranteed"
        )
    forbidden = {_key(u, v) for u, v in g2.edges()}
    base = XorShift64Star(seed)
    for restart in range(max_restarts):
        rng = base.spawn(restart)
        f1 = list(range(n))
        rng.shuffle(f1)
        search = _ConflictSearch(g1, forbidden, f1)
        conflicts = search.total()
        while conflicts:
            edge = search.first_conflict()
            assert edge is not None
            offset = rng.randbelow(n)
            if not (search.improve(edge[0], offset) or search.improve(edge[1], offset)):
                break
            conflicts = search.total()
        if conflicts == 0:
            logger.debug("Packing found after {} restart(s)", restart + 1)
            return Placement(tuple(search.f1), tuple(range(n)))
        logger.debug("Restart {} stalled with {} conflict(s)", restart, conflicts)
    raise PackingInfeasibleHint(f"no packing found within {max_restarts} restarts (n={n})")
