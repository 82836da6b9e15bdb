"""Immutable graph and digraph types on dense vertex indices 0..n-1."""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Literal

from extremal.core.errors import InvalidInputError


class Infinity(Enum):
    """Distinguished value for the girth of a forest and unreachable distances."""

    INFINITE = "infinite"

    def __repr__(self) -> str:
        return "INF"


INF: Literal[Infinity.INFINITE] = Infinity.INFINITE

Girth = int | Infinity
Distance = int | Infinity


def finite_or(value: int | Infinity, default: int) -> int:
    """Replace the infinite value by ``default``."""
    return default if value is INF else value


def at_least(value: int | Infinity, bound: int) -> bool:
    """Compare a possibly infinite value against an integer bound."""
    return value is INF or value >= bound


def _normalise(n: int, adjacency: Sequence[Iterable[int]], *, directed: bool) -> tuple[
    tuple[tuple[int, ...], ...], tuple[frozenset[int], ...]
]:
    if n < 0:
        raise InvalidInputError("vertex count must be non-negative")
    if len(adjacency) != n:
        raise InvalidInputError(f"adjacency has {len(adjacency)} rows for {n} vertices")
    rows: list[tuple[int, ...]] = []
    sets: list[frozenset[int]] = []
    for v, raw in enumerate(adjacency):
        neighbours = frozenset(raw)
        if v in neighbours:
            raise InvalidInputError(f"self-loop at vertex {v}")
        for w in neighbours:
            if not 0 <= w < n:
                raise InvalidInputError(f"vertex {w} out of range for n={n}")
        rows.append(tuple(sorted(neighbours)))
        sets.append(neighbours)
    if not directed:
        for v, neighbours in enumerate(sets):
            for w in neighbours:
                if v not in sets[w]:
                    raise InvalidInputError(f"adjacency not symmetric on edge {v}-{w}")
    return tuple(rows), tuple(sets)


class Graph:
    """Simple undirected graph with sorted adjacency rows.

    Instances are immutable and safe to share across threads.
    """

    __slots__ = ("n", "adjacency", "_sets", "_edge_count")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]) -> None:
        self.n = n
        self.adjacency, self._sets = _normalise(n, adjacency, directed=False)
        self._edge_count = sum(len(row) for row in self.adjacency) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge {u}-{v} out of range for n={n}")
            if v in rows[u]:
                raise InvalidInputError(f"duplicate edge {u}-{v}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    @classmethod
    def relabel(
        cls, edges: Iterable[tuple[Hashable, Hashable]], vertices: Iterable[Hashable] = ()
    ) -> tuple[Graph, dict[Hashable, int]]:
        """Ingest arbitrary labels, remapping them to dense indices in first-seen order."""
        mapping: dict[Hashable, int] = {}
        for label in vertices:
            mapping.setdefault(label, len(mapping))
        pairs: list[tuple[int, int]] = []
        for a, b in edges:
            u = mapping.setdefault(a, len(mapping))
            v = mapping.setdefault(b, len(mapping))
            pairs.append((u, v))
        return cls.from_edges(len(mapping), pairs), mapping

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [() for _ in range(n)])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._sets[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def max_degree(self) -> int:
        return max((len(row) for row in self.adjacency), default=0)

    def min_degree(self) -> int:
        return min((len(row) for row in self.adjacency), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph plus the original index of each new vertex."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        rows = [[index[w] for w in self.adjacency[v] if w in index] for v in keep]
        return Graph(len(keep), rows), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._edge_count})"


class Digraph:
    """Simple digraph with sorted out-adjacency rows; loops are rejected."""

    __slots__ = ("n", "successors_of", "_sets")

    def __init__(self, n: int, out_adjacency: Sequence[Iterable[int]]) -> None:
        self.n = n
        self.successors_of, self._sets = _normalise(n, out_adjacency, directed=True)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"arc {u}->{v} out of range for n={n}")
            rows[u].add(v)
        return cls(n, rows)

    def successors(self, v: int) -> tuple[int, ...]:
        return self.successors_of[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def out_degree(self, v: int) -> int:
        return len(self.successors_of[v])

    def min_out_degree(self) -> int:
        return min((len(row) for row in self.successors_of), default=0)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.successors_of):
            for v in row:
                yield (u, v)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sum(len(r) for r in self.successors_of)})"


@dataclass(frozen=True, slots=True)
class Cycle:
    """Closed vertex sequence; the closing edge runs from the last vertex to the first."""

    vertices: tuple[int, ...]
    directed: bool = False

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        k = len(self.vertices)
        for i in range(k):
            yield self.vertices[i], self.vertices[(i + 1) % k]

    def is_valid_in(self, graph: Graph | Digraph) -> bool:
        minimum = 2 if self.directed else 3
        if len(self.vertices) < minimum or len(set(self.vertices)) != len(self.vertices):
            return False
        if isinstance(graph, Digraph):
            return self.directed and all(graph.has_arc(u, v) for u, v in self.edges())
        return (not self.directed) and all(graph.has_edge(u, v) for u, v in self.edges())
