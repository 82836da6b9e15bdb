"""Run reports and the independent re-checks behind every certified bound.

Girth, domination and connectivity are recomputed with networkx; representation
vectors and partition conditions with plain loops over the raw outputs.
"""

from __future__ import annotations

import hashlib
import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from extremal.cds import CdsResult, f_nk
from extremal.coalition import CoalitionInstance, PartitionResult
from extremal.core.constants import REPORT_SCHEMA_VERSION
from extremal.fair import EdgePartition, fairness_bound_squared
from extremal.graphs import INF, Girth, Graph
from extremal.packing import CombinedGraph
from extremal.prob import KpnResult, L1BallInstance

Number = int | float | str


class BoundCheck(BaseModel):
    """One certified inequality ``achieved <relation> claimed``."""

    model_config = ConfigDict(frozen=True)

    name: str
    relation: str
    claimed: Number
    achieved: Number
    holds: bool


class RunReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=REPORT_SCHEMA_VERSION, alias="schema")
    command: str
    inputs_digest: str
    seed: int | None = None
    outputs: dict[str, Any] = Field(default_factory=dict)
    bounds: list[BoundCheck] = Field(default_factory=list)
    wall_time_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(check.holds for check in self.bounds)

    def failed(self) -> list[BoundCheck]:
        return [check for check in self.bounds if not check.holds]

    def to_json(self, indent: int | None = 2) -> str:
        return self.model_dump_json(by_alias=True, indent=indent)


def digest_inputs(*parts: str | bytes) -> str:
    """sha256 over the inputs, each part length-prefixed."""
    hasher = hashlib.sha256()
    for part in parts:
        data = part.encode("utf-8") if isinstance(part, str) else part
        hasher.update(len(data).to_bytes(8, "big"))
        hasher.update(data)
    return hasher.hexdigest()


def jsonable(value: object) -> Any:
    """Fractions become ``"p/q"`` strings, INF becomes ``"inf"``, containers are walked."""
    if value is INF:
        return "inf"
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, bool | int | float | str) or value is None:
        return value
    if isinstance(value, Mapping):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, Iterable):
        return [jsonable(v) for v in value]
    return str(value)


def _number(value: object) -> Number:
    if value is INF or (isinstance(value, float) and math.isinf(value)):
        return "inf"
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, int | float | str):
        return value
    return str(value)


def at_most(name: str, achieved: object, claimed: object, holds: bool) -> BoundCheck:
    return BoundCheck(
        name=name, relation="<=", claimed=_number(claimed), achieved=_number(achieved), holds=holds
    )


def at_least(name: str, achieved: object, claimed: object, holds: bool) -> BoundCheck:
    return BoundCheck(
        name=name, relation=">=", claimed=_number(claimed), achieved=_number(achieved), holds=holds
    )


def exactly(name: str, achieved: int, claimed: int) -> BoundCheck:
    return BoundCheck(
        name=name, relation="==", claimed=claimed, achieved=achieved, holds=achieved == claimed
    )


def _nx_graph(n: int, edges: Iterable[tuple[int, int]]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return graph


def recheck_girth(g: Graph) -> Girth:
    value = nx.girth(_nx_graph(g.n, g.edges()))
    return INF if math.isinf(value) else int(value)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def check_packing(combined: CombinedGraph, guests: Sequence[Graph]) -> list[BoundCheck]:
    """Layers are images of the guests, pairwise edge-disjoint, and the union meets its girth."""
    host = combined.host
    layers: dict[int, set[tuple[int, int]]] = {}
    for edge, tag in combined.provenance.items():
        layers.setdefault(tag, set()).add(edge)
    checks: list[BoundCheck] = []
    expected_edges = sum(g.edge_count for g in guests)
    checks.append(exactly("edge_disjoint", len(combined.provenance), expected_edges))
    checks.append(exactly("host_edges", host.edge_count, expected_edges))
    for index, mapping in enumerate(combined.layer_maps[: len(guests)]):
        guest = guests[index]
        bijective = sorted(mapping) == list(range(host.n))
        image = {_key(mapping[u], mapping[v]) for u, v in guest.edges()}
        checks.append(
            at_least(
                f"layer_{index}_is_guest_image",
                len(layers.get(index, set())),
                guest.edge_count,
                bijective and image == layers.get(index, set()),
            )
        )
    achieved = recheck_girth(host)
    claimed = combined.guaranteed_girth
    holds = achieved is INF or (claimed is not INF and achieved >= claimed)
    checks.append(at_least("combined_girth", achieved, claimed, holds))
    return checks


def check_hamilton_layers(combined: CombinedGraph) -> list[BoundCheck]:
    """Each layer is a single spanning cycle; the union meets its girth."""
    n = combined.host.n
    checks: list[BoundCheck] = []
    for index in range(combined.layer_count):
        edges = [edge for edge, tag in combined.provenance.items() if tag == index]
        layer = _nx_graph(n, edges)
        spanning_cycle = (
            len(edges) == n
            and all(degree == 2 for _, degree in layer.degree)
            and nx.is_connected(layer)
        )
        checks.append(at_least(f"layer_{index}_hamiltonian", len(edges), n, spanning_cycle))
    achieved = recheck_girth(combined.host)
    claimed = combined.guaranteed_girth
    holds = achieved is INF or (claimed is not INF and achieved >= claimed)
    checks.append(at_least("combined_girth", achieved, claimed, holds))
    return checks


def check_cds(g: Graph, result: CdsResult, *, certified_total: bool) -> list[BoundCheck]:
    """Domination and connectivity on networkx, the merge budget and, if certified, the total."""
    graph = _nx_graph(g.n, g.edges())
    chosen = set(result.connected_set)
    dominating = bool(chosen) and nx.is_dominating_set(graph, chosen)
    connected = bool(chosen) and nx.is_connected(graph.subgraph(chosen))
    checks = [
        at_least("dominating", len(chosen), 1, dominating),
        at_least("connected", len(chosen), 1, connected),
    ]
    components = nx.number_connected_components(graph.subgraph(result.dominating_set))
    budget = len(result.dominating_set) + f_nk(g.n, result.k, components)
    checks.append(at_most("merge_budget", result.size, budget, result.size <= budget))
    if certified_total:
        checks.append(
            at_most("size_bound", result.size, result.bound, result.size <= result.bound)
        )
    return checks


def check_coalition_partition(
    completed: CoalitionInstance, partition: PartitionResult, coalition: Iterable[int]
) -> list[BoundCheck]:
    """Every child has a listed friend in its class, the classes cover, and R is split."""
    owner: dict[int, int] = {}
    disjoint = True
    for index, part in enumerate(partition.parts):
        for child in part:
            disjoint = disjoint and child not in owner
            owner[child] = index
    covers = disjoint and sorted(owner) == list(range(completed.n))
    unhappy = [
        child
        for child in range(completed.n)
        if child in owner
        and child in completed.choices
        and not any(owner.get(friend) == owner[child] for friend in completed.choices[child])
    ]
    valid = covers and completed.is_complete() and not unhappy
    classes_of_r = {owner.get(member) for member in coalition}
    return [
        at_most("children_without_friend", len(unhappy), 0, valid),
        at_least("classes_meeting_coalition", len(classes_of_r), 2, len(classes_of_r) >= 2),
    ]


def _is_factor(graph: nx.Graph, pattern: Graph) -> bool:
    """Vertex-disjoint copies of ``pattern`` covering every vertex of ``graph``."""
    t = pattern.n
    n = graph.number_of_nodes()
    if t == 0 or n % t:
        return False
    shape = _nx_graph(t, pattern.edges())
    if nx.is_connected(shape):
        return all(
            nx.is_isomorphic(graph.subgraph(component), shape)
            for component in nx.connected_components(graph)
        )
    return nx.is_isomorphic(graph, nx.disjoint_union_all([shape] * (n // t)))


def check_fair(
    partition: EdgePartition,
    edges: Iterable[tuple[int, int]],
    width: int,
    kind: str,
    *,
    pattern: Graph | None = None,
) -> list[BoundCheck]:
    """Recount ``x``, rebuild ``y`` and compare ``||x - y||^2`` with the squared bound.

    T-factors are only certified when ``pattern`` is given.
    """
    chosen = [_key(u, v) for u, v in edges]
    host = partition.host
    graph = _nx_graph(host.n, chosen)
    in_host = all(host.has_edge(u, v) for u, v in chosen) and len(set(chosen)) == len(chosen)
    if kind.endswith("matching"):
        shape = nx.is_perfect_matching(_nx_graph(host.n, host.edges()), set(chosen))
    elif kind.endswith("hamilton"):
        shape = (
            len(chosen) == host.n
            and all(degree == 2 for _, degree in graph.degree)
            and nx.is_connected(graph)
        )
    else:
        shape = pattern is not None and _is_factor(graph, pattern)
    x = [0] * partition.m
    sizes = [0] * partition.m
    for color in partition.colors.values():
        sizes[color] += 1
    for edge in chosen:
        x[partition.colors[edge]] += 1
    y = [Fraction(size * len(chosen), host.edge_count) for size in sizes]
    distance = sum(((xi - yi) ** 2 for xi, yi in zip(x, y, strict=True)), Fraction(0))
    bound = fairness_bound_squared(partition.m, width)
    return [
        at_least("copy_in_host", len(chosen), len(chosen), in_host and shape),
        at_most("distance_squared", distance, bound, distance <= bound),
    ]


def check_hamming(inst: L1BallInstance, y: Sequence[int], count: int) -> list[BoundCheck]:
    points = np.asarray(inst.points, dtype=np.int64).reshape(len(inst.points), inst.n)
    distances = np.abs(points - np.asarray(y, dtype=np.int64)).sum(axis=1)
    recount = int((distances <= inst.radius).sum())
    half = math.ceil(len(inst.points) / 2)
    return [
        exactly("reported_count", recount, count),
        at_least("covered_points", recount, half, recount >= half),
    ]


def check_kpn(result: KpnResult) -> list[BoundCheck]:
    """Numeric cover check in complex arithmetic plus the two lower bounds."""
    p, n = result.p, result.n
    grid = np.array(np.meshgrid(*[np.arange(p)] * n, indexing="ij")).reshape(n, -1).T
    roots = np.exp(2j * np.pi * grid / p)
    cover = np.exp(2j * np.pi * np.array([v.exponents for v in result.cover]) / p)
    products = np.abs(roots @ cover.T)
    hit = products.min(axis=1) < 1e-9
    lower = result.lower_bound
    return [
        exactly("vectors_covered", int(hit.sum()), p**n),
        at_least("lower_bound", result.value, lower, result.value >= lower),
    ]
