"""Exact optimum of the representation distance over all perfect matchings or Hamilton cycles."""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from itertools import permutations

from extremal.core.errors import InvalidInputError
from extremal.fair.partition import EdgePartition
from extremal.oracle.budget import DEFAULT_BUDGET, OracleBudget

Edge = tuple[int, int]


class CopyKind(StrEnum):
    MATCHING = "matching"
    HAMILTON = "hamilton"


@dataclass(frozen=True, slots=True)
class FairOptimum:
    distance_squared: Fraction
    witness: tuple[Edge, ...]
    copies: int

    @property
    def l2(self) -> float:
        return math.sqrt(self.distance_squared)


def _matchings(side: int) -> Iterator[tuple[Edge, ...]]:
    for image in permutations(range(side)):
        yield tuple((a, side + b) for a, b in enumerate(image))


def _hamilton_cycles(n: int) -> Iterator[tuple[Edge, ...]]:
    """Each undirected cycle once: start at 0, second vertex below the last."""
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        order = (0, *rest)
        yield tuple(
            (min(order[i], order[(i + 1) % n]), max(order[i], order[(i + 1) % n]))
            for i in range(n)
        )


def exact_fair_optimum(
    partition: EdgePartition, kind: CopyKind | str, budget: OracleBudget = DEFAULT_BUDGET
) -> FairOptimum:
    """Minimum of ``||x(H) - y||^2`` over every copy H, with the first minimiser as witness.

    ``matching`` expects the host K_{n,n} with sides ``0..n-1`` and ``n..2n-1``;
    ``hamilton`` expects K_n.
    """
    kind = CopyKind(kind)
    host = partition.host
    if kind is CopyKind.MATCHING:
        side = host.n // 2
        budget.require("exact_fair_optimum", side, budget.max_matching_side)
        if host.n != 2 * side or host.edge_count != side * side:
            raise InvalidInputError("matching oracle expects the host K_{n,n}")
        copies = _matchings(side)
        per_copy = side
    else:
        budget.require("exact_fair_optimum", host.n, budget.max_hamilton_vertices)
        if host.n < 3 or host.edge_count != host.n * (host.n - 1) // 2:
            raise InvalidInputError("Hamilton oracle expects the host K_n with n >= 3")
        copies = _hamilton_cycles(host.n)
        per_copy = host.n
    total = host.edge_count
    sizes = [0] * partition.m
    for color in partition.colors.values():
        sizes[color] += 1
    target = [Fraction(size * per_copy, total) for size in sizes]
    best: FairOptimum | None = None
    count = 0
    for edges in copies:
        count += 1
        x = [0] * partition.m
        for edge in edges:
            x[partition.colors[edge]] += 1
        value = sum(((xi - yi) ** 2 for xi, yi in zip(x, target, strict=True)), Fraction(0))
        if best is None or value < best.distance_squared:
            best = FairOptimum(value, edges, 0)
    assert best is not None
    return FairOptimum(best.distance_squared, best.witness, count)
