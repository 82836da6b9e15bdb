"""Edge partitions of a host graph and representation vectors."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from extremal.core.errors import EdgeNotInHost, InvalidInputError
from extremal.core.rng import XorShift64Star
from extremal.graphs import Graph
from extremal.graphs.generators import complete_graph

Edge = tuple[int, int]
RepVector = tuple[int, ...]
TargetVector = tuple[Fraction, ...]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, slots=True)
class EdgePartition:
    """Colouring of every host edge with a class index in ``0..m-1``."""

    host: Graph
    colors: Mapping[Edge, int]
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidInputError("a partition needs at least one class")
        host_edges = set(self.host.edges())
        for edge, color in self.colors.items():
            if edge not in host_edges:
                raise EdgeNotInHost(f"coloured edge {edge} is not a host edge")
            if not 0 <= color < self.m:
                raise InvalidInputError(f"edge {edge} has class {color} outside 0..{self.m - 1}")
        missing = host_edges.difference(self.colors)
        if missing:
            raise InvalidInputError(f"{len(missing)} host edges have no class, e.g. {min(missing)}")

    def color_of(self, u: int, v: int) -> int:
        try:
            return self.colors[edge_key(u, v)]
        except KeyError as exc:
            raise EdgeNotInHost(f"edge {u}-{v} is not in the host graph") from exc

    def class_sizes(self) -> RepVector:
        sizes = [0] * self.m
        for color in self.colors.values():
            sizes[color] += 1
        return tuple(sizes)


def rep_vector(edges: Iterable[Edge], partition: EdgePartition) -> RepVector:
    """Per-class edge counts x(H, P) of the subgraph with the given edges."""
    counts = [0] * partition.m
    for u, v in edges:
        counts[partition.color_of(u, v)] += 1
    return tuple(counts)


def target_vector(partition: EdgePartition, f: int) -> TargetVector:
    """The fair share ``y = (f / g) * x(G, P)`` for a subgraph with ``f`` edges."""
    g = partition.host.edge_count
    return tuple(Fraction(f * size, g) for size in partition.class_sizes())


def potential(x: Iterable[int], y: Iterable[Fraction]) -> Fraction:
    """Squared Euclidean distance between a representation vector and its target."""
    return sum(((Fraction(b) - a) ** 2 for a, b in zip(x, y, strict=True)), Fraction(0))


def linf_distance(x: Iterable[int], y: Iterable[Fraction]) -> Fraction:
    return max((abs(Fraction(b) - a) for a, b in zip(x, y, strict=True)), default=Fraction(0))


def random_partition(host: Graph, m: int, rng: XorShift64Star) -> EdgePartition:
    """Each host edge, in lexicographic order, gets a uniform class."""
    return EdgePartition(host, {edge: rng.randbelow(m) for edge in host.edges()}, m)


def star_counterexample_partition(n: int) -> EdgePartition:
    """Three classes on K_{2n}: the clique on 0..n-1, the clique on n..2n-1, and the rest.

    Every spanning star misses one clique class completely although its fair
    share there is about a quarter of its edges.
    """
    host = complete_graph(2 * n)
    colors: dict[Edge, int] = {}
    for u, v in host.edges():
        if v < n:
            colors[(u, v)] = 0
        elif u >= n:
            colors[(u, v)] = 1
        else:
            colors[(u, v)] = 2
    return EdgePartition(host, colors, 3)


def star_edges(n_vertices: int, center: int) -> list[Edge]:
    return [edge_key(center, v) for v in range(n_vertices) if v != center]


def parse_partition(text: str, host: Graph) -> EdgePartition:
    """Parse ``m`` followed by one ``u v c`` line per host edge."""
    rows = [
        (number, line.split())
        for number, raw in enumerate(text.splitlines(), start=1)
        if (line := raw.strip()) and not line.startswith("#")
    ]
    if not rows:
        raise InvalidInputError("partition file is empty")
    number, header = rows[0]
    if len(header) != 1 or not header[0].isdigit():
        raise InvalidInputError(f"line {number}: header must be the class count m")
    m = int(header[0])
    colors: dict[Edge, int] = {}
    for number, parts in rows[1:]:
        if len(parts) != 3:
            raise InvalidInputError(f"line {number}: expected 'u v c'")
        try:
            u, v, c = (int(token) for token in parts)
        except ValueError as exc:
            raise InvalidInputError(f"line {number}: non-integer token") from exc
        edge = edge_key(u, v)
        if edge in colors:
            raise InvalidInputError(f"line {number}: edge {u}-{v} listed twice")
        in_range = 0 <= u < host.n and 0 <= v < host.n
        if not in_range or not host.has_edge(u, v):
            raise EdgeNotInHost(f"line {number}: edge {u}-{v} is not a host edge")
        colors[edge] = c
    return EdgePartition(host, colors, m)


def load_partition(path: Path, host: Graph) -> EdgePartition:
    return parse_partition(Path(path).read_text(encoding="utf-8"), host)


def format_partition(partition: EdgePartition) -> str:
    lines = [str(partition.m)]
    lines.extend(f"{u} {v} {c}" for (u, v), c in sorted(partition.colors.items()))
    return "\n".join(lines) + "\n"
