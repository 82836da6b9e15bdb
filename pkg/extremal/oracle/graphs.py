"""Exhaustive girth, domination numbers and conditional expectations, on networkx."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import networkx as nx

from extremal.core.errors import Disconnected
from extremal.graphs import INF, Girth, Graph
from extremal.oracle.budget import DEFAULT_BUDGET, OracleBudget


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def exact_girth(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> Girth:
    """Shortest simple cycle, found by enumerating cycles under a growing length bound.

    INF for forests.
    """
    budget.require("exact_girth", g.n, budget.max_girth_vertices)
    graph = to_networkx(g)
    for bound in range(3, g.n + 1):
        # no cycle was shorter than bound
        if next(iter(nx.simple_cycles(graph, length_bound=bound)), None) is not None:
            return bound
    return INF


def _dominating_sets(
    graph: nx.Graph, start: int, *, connected: bool
) -> Iterator[tuple[int, ...]]:
    """Subsets in order of size, then lexicographically, that dominate (and connect)."""
    for size in range(start, graph.number_of_nodes() + 1):
        for subset in combinations(sorted(graph.nodes), size):
            if not nx.is_dominating_set(graph, subset):
                continue
            if connected and not nx.is_connected(graph.subgraph(subset)):
                continue
            yield subset


def minimum_dominating_set(
    g: Graph, *, connected: bool = False, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, ...]:
    """Lexicographically first dominating set of minimum size (connected if asked)."""
    budget.require("exact_gamma", g.n, budget.max_gamma_vertices)
    graph = to_networkx(g)
    if connected and not nx.is_connected(graph):
        raise Disconnected("connected domination needs a connected graph")
    max_degree = max((d for _, d in graph.degree), default=0)
    start = max(1, math.ceil(g.n / (max_degree + 1)))
    return next(iter(_dominating_sets(graph, start, connected=connected)))


def exact_gamma(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return len(minimum_dominating_set(g, budget=budget))


def exact_gamma_c(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return len(minimum_dominating_set(g, connected=True, budget=budget))


@dataclass(frozen=True, slots=True)
class ExactExpectation:
    """Expectations over every completion of the undecided vertices."""

    t: Fraction
    y: Fraction
    d: Fraction
    s: Fraction


def exact_conditional_expectation(
    g: Graph,
    decisions: Sequence[bool | None],
    p: Fraction,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> ExactExpectation:
    """E|T|, E|Y_T|, E[D'] and E|S| given fixed memberships (``None`` = undecided).

    D' adds ``1 / (d_T(v) + 1)`` for every v in T and 1 for every undominated vertex.
    """
    open_vertices = [v for v, d in enumerate(decisions) if d is None]
    budget.require("exact_conditional_expectation", len(open_vertices), budget.max_gamma_vertices)
    graph = to_networkx(g)
    totals = [Fraction(0)] * 4
    for bits in product((False, True), repeat=len(open_vertices)):
        member = list(decisions)
        weight = Fraction(1)
        for v, bit in zip(open_vertices, bits, strict=True):
            member[v] = bit
            weight *= p if bit else 1 - p
        t = {v for v, inside in enumerate(member) if inside}
        undominated = [v for v in graph if v not in t and not t.intersection(graph[v])]
        shares = (Fraction(1, len(t.intersection(graph[v])) + 1) for v in t)
        d_prime = sum(shares, Fraction(0)) + len(undominated)
        for i, value in enumerate((len(t), len(undominated), d_prime, len(t) + len(undominated))):
            totals[i] += weight * value
    return ExactExpectation(*totals)
