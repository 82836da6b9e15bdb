"""Enumeration oracles for coalitions, Poisson-binomial sums and Hamming centres."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from fractions import Fraction
from itertools import product

from extremal.coalition.instance import CoalitionInstance, PartitionResult
from extremal.core.errors import InfeasibleParameters
from extremal.oracle.budget import DEFAULT_BUDGET, OracleBudget
from extremal.prob.hamming import L1BallInstance


def _blocks(items: list[int]) -> Iterator[list[list[int]]]:
    """Set partitions by inserting each new item into an existing block or a new one."""
    if not items:
        yield []
        return
    head, rest = items[-1], items[:-1]
    for partial in _blocks(rest):
        for i in range(len(partial)):
            yield [*partial[:i], [*partial[i], head], *partial[i + 1 :]]
        yield [*partial, [head]]


def all_valid_partitions(
    inst: CoalitionInstance, budget: OracleBudget = DEFAULT_BUDGET
) -> Iterator[PartitionResult]:
    """Every partition of the children in which each child has a listed friend in its class."""
    budget.require("all_valid_partitions", inst.n, budget.max_partition_vertices)
    if not inst.is_complete():
        raise InfeasibleParameters("partition enumeration needs every friend list fixed")
    lists = [set(inst.choices[i]) for i in range(inst.n)]
    for blocks in _blocks(list(range(inst.n))):
        if all(lists[v] & set(block) for block in blocks for v in block):
            yield PartitionResult.of(blocks)


def exact_pb_cdf(probabilities: Sequence[Fraction], d: int) -> Fraction:
    """``Pr[X <= d]`` by summing over all ``2^n`` outcomes."""
    total = Fraction(0)
    for outcome in product((0, 1), repeat=len(probabilities)):
        if sum(outcome) > d:
            continue
        weight = Fraction(1)
        for bit, p in zip(outcome, probabilities, strict=True):
            weight *= p if bit else 1 - p
        total += weight
    return total


def exact_hamming_best(
    inst: L1BallInstance, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[tuple[int, ...], int]:
    """Binary centre covering the most points within Hamming distance d, first in lex order."""
    budget.require("exact_hamming_best", inst.n, budget.max_hamming_bits)
    best: tuple[tuple[int, ...], int] = ((0,) * inst.n, -1)
    for y in product((0, 1), repeat=inst.n):
        distances = (sum(ai != yi for ai, yi in zip(a, y, strict=True)) for a in inst.points)
        covered = sum(1 for distance in distances if distance <= inst.radius)
        if covered > best[1]:
            best = (y, covered)
    return best
