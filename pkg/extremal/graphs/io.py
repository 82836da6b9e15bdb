"""Edge-list codecs for graph and digraph files.

Format: first line ``n m`` (a third token ``directed`` declares arc
semantics), then ``m`` lines ``u v`` with 0-indexed endpoints. Blank lines and
lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from collections.abc import Iterator
from pathlib import Path

from extremal.core.errors import InvalidInputError
from extremal.graphs.graph import Digraph, Graph


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _parse_int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise InvalidInputError(f"line {number}: expected an integer, got {token!r}") from exc


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]], bool]:
    lines = _content_lines(text)
    try:
        number, header = next(lines)
    except StopIteration as exc:
        raise InvalidInputError("graph file is empty") from exc
    tokens = header.split()
    if len(tokens) not in (2, 3) or (len(tokens) == 3 and tokens[2] != "directed"):
        raise InvalidInputError(f"line {number}: header must be 'n m [directed]'")
    n = _parse_int(tokens[0], number)
    m = _parse_int(tokens[1], number)
    directed = len(tokens) == 3
    edges: list[tuple[int, int]] = []
    for number, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise InvalidInputError(f"line {number}: expected 'u v'")
        edges.append((_parse_int(parts[0], number), _parse_int(parts[1], number)))
    if len(edges) != m:
        raise InvalidInputError(f"header declares {m} edges but {len(edges)} were listed")
    return n, edges, directed


def load_graph(path: Path) -> Graph:
    n, edges, directed = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    if directed:
        raise InvalidInputError(f"{path} declares a digraph; an undirected graph is required")
    return Graph.from_edges(n, edges)


def load_digraph(path: Path) -> Digraph:
    n, arcs, _ = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    return Digraph.from_arcs(n, arcs)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_digraph(d: Digraph) -> str:
    arcs = list(d.arcs())
    lines = [f"{d.n} {len(arcs)} directed"]
    lines.extend(f"{u} {v}" for u, v in arcs)
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path: Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8")
