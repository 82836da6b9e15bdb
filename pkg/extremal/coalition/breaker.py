"""Coalition constructions for k <= 2 and the partition that breaks any coalition for k >= 3."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import product

from loguru import logger

from extremal.coalition.instance import CoalitionInstance, PartitionResult, verify_partition
from extremal.core.constants import COLOURING_EXHAUSTIVE_BITS, COLOURING_SAMPLE_ATTEMPTS
from extremal.core.errors import (
    InfeasibleParameters,
    InternalInvariantViolation,
    InvalidInputError,
    NotFound,
)
from extremal.core.rng import XorShift64Star
from extremal.graphs import Cycle, Digraph, is_acyclic, shortest_directed_cycle


def coalition_construct(k: int, r: int, n: int) -> CoalitionInstance:
    """Friend lists for R = {0..r-1} that keep R in one class whatever the others choose.

    k = 1: every member lists its cyclic successor in R.
    k = 2: ``S_0 = {1, 2}``, ``S_1 = {0, 2}`` and ``S_i = {0, 1}`` for the rest of R.
    """
    if k not in (1, 2):
        raise InfeasibleParameters(f"successful coalitions exist only for k <= 2, got k={k}")
    if r < 2 or n < k + 1 or n < r:
        raise InfeasibleParameters(f"need r >= 2, n >= k+1 and n >= r; got r={r}, n={n}")
    if k == 1:
        choices = {i: ((i + 1) % r,) for i in range(r)}
    else:
        choices = {0: (1, 2), 1: (0, 2)}
        choices.update({i: (0, 1) for i in range(2, r)})
    return CoalitionInstance.build(n, k, r, choices)


def acyclic_completion(inst: CoalitionInstance) -> CoalitionInstance:
    """Fill ``S_j = {j-1, ..., j-k}`` for every child outside R.

    Arcs outside R only point to smaller indices, so the digraph induced on
    the non-coalition children is acyclic.
    """
    if inst.r < inst.k:
        raise InfeasibleParameters(f"acyclic completion needs r >= k, got r={inst.r}, k={inst.k}")
    extra = [j for j in inst.choices if j >= inst.r]
    if extra:
        raise InvalidInputError(f"children {extra} outside the coalition already have lists")
    if any(i not in inst.choices for i in range(inst.r)):
        raise InvalidInputError("every coalition member needs a fixed list")
    completed = inst.with_choices({j: range(j - inst.k, j) for j in range(inst.r, inst.n)})
    if not is_acyclic(completed.digraph(), range(inst.r, inst.n)):
        raise InternalInvariantViolation("completion left a cycle outside the coalition")
    return completed


def _extend_path(d: Digraph, path: list[int], on_path: set[int], length: int) -> Iterator[Cycle]:
    start, u = path[0], path[-1]
    if len(path) == length:
        if d.has_arc(u, start):
            yield Cycle(tuple(path), directed=True)
        return
    for w in d.successors_of[u]:
        if w > start and w not in on_path:
            path.append(w)
            on_path.add(w)
            yield from _extend_path(d, path, on_path, length)
            path.pop()
            on_path.discard(w)


def _cycles_of_length(d: Digraph, length: int) -> Iterator[Cycle]:
    """Simple cycles with exactly ``length`` vertices, each starting at its smallest vertex."""
    for start in range(d.n):
        yield from _extend_path(d, [start], {start}, length)


def find_two_disjoint_cycles(d: Digraph) -> tuple[Cycle, Cycle]:
    """Two vertex-disjoint directed cycles.

    Cycles are enumerated by increasing length; for each one the remainder
    is searched for its shortest cycle.  Any digraph with minimum out-degree
    at least 3 has such a pair, so :class:`NotFound` means the input was
    outside that class.
    """
    for length in range(2, d.n + 1):
        for cycle in _cycles_of_length(d, length):
            rest = set(range(d.n)).difference(cycle.vertices)
            other = shortest_directed_cycle(d, rest)
            if other is not None:
                logger.debug("Disjoint cycles {} and {}", cycle.vertices, other.vertices)
                return cycle, other
    raise NotFound(f"no two disjoint cycles (minimum out-degree {d.min_out_degree()})")


def _maximal_extension(d: Digraph, a: set[int], b: set[int]) -> tuple[set[int], set[int]]:
    """Grow A and B while every member keeps an out-neighbour on its own side."""
    unassigned = set(range(d.n)) - a - b
    while unassigned:
        progressed = False
        for v in sorted(unassigned):
            successors = d.successors_of[v]
            if any(w in a for w in successors):
                a.add(v)
            elif any(w in b for w in successors):
                b.add(v)
            else:
                continue
            unassigned.discard(v)
            progressed = True
        if not progressed:
            # the leftover set is closed under out-arcs
            a |= unassigned
            unassigned.clear()
    return a, b


def _colour_constraints(inst: CoalitionInstance) -> tuple[list[int], dict[int, frozenset[int]]]:
    coalition = sorted(inst.coalition)
    constrained = {i: inst.choice(i) for i in coalition}
    relevant = sorted(set(coalition).union(*constrained.values()))
    return relevant, constrained


def _good_colouring(
    colour: dict[int, int], coalition: list[int], constrained: dict[int, frozenset[int]]
) -> bool:
    if len({colour[i] for i in coalition}) < 2:
        return False
    return all(any(colour[f] == colour[i] for f in friends) for i, friends in constrained.items())


def claim_partition(inst: CoalitionInstance, *, seed: int = 0) -> PartitionResult:
    """Two classes splitting R, found by two-colouring the children.

    Colourings are drawn at random until R is bichromatic and every member
    of R shares a colour with one of its friends, with an exhaustive pass
    over the relevant children as fallback.  Every child outside R is then
    given a list containing the smallest coalition member of its own colour.
    """
    base = inst.coalition_only()
    if base.r < 2:
        raise InfeasibleParameters("a coalition of one child cannot be split")
    relevant, constrained = _colour_constraints(base)
    coalition = sorted(base.coalition)
    rng = XorShift64Star(seed)
    found: dict[int, int] | None = None
    for attempt in range(COLOURING_SAMPLE_ATTEMPTS):
        colour = {v: rng.randbelow(2) for v in relevant}
        if _good_colouring(colour, coalition, constrained):
            logger.debug("Colouring found after {} draws", attempt + 1)
            found = colour
            break
    if found is None:
        if len(relevant) > COLOURING_EXHAUSTIVE_BITS:
            raise NotFound(f"no good colouring in {COLOURING_SAMPLE_ATTEMPTS} draws")
        for bits in product((0, 1), repeat=len(relevant)):
            colour = dict(zip(relevant, bits, strict=True))
            if _good_colouring(colour, coalition, constrained):
                found = colour
                break
    if found is None:
        raise NotFound("no two-colouring splits the coalition")
    anchors = {c: min(i for i in coalition if found[i] == c) for c in (0, 1)}
    # children nobody constrains join the class of anchor 0
    colour_of = {v: found.get(v, 0) for v in range(base.n)}
    extra: dict[int, list[int]] = {}
    for j in range(base.r, base.n):
        anchor = anchors[colour_of[j]]
        fillers = [v for v in range(base.n) if v not in (j, anchor)][: base.k - 1]
        extra[j] = [anchor, *fillers]
    completed = base.with_choices(extra)
    parts = [[v for v in range(base.n) if colour_of[v] == c] for c in (0, 1)]
    return PartitionResult.of(parts, completed)


def break_coalition(inst: CoalitionInstance, *, seed: int = 0) -> PartitionResult:
    """Complete the open lists and split the children into two valid classes that divide R.

    For r >= k the non-coalition lists are completed acyclically, two
    disjoint cycles are found (each must meet R) and grown to a maximal pair
    of classes.  For r < k the colouring construction is used.
    """
    if inst.k < 3:
        raise InfeasibleParameters(f"coalitions with k={inst.k} can succeed; breaking needs k >= 3")
    base = inst.coalition_only()
    if base.r < 2:
        raise InfeasibleParameters("a coalition of one child cannot be split")
    if base.r < base.k:
        result = claim_partition(base, seed=seed)
        strategy = "colouring"
    else:
        completed = acyclic_completion(base)
        d = completed.digraph()
        first, second = find_two_disjoint_cycles(d)
        a, b = _maximal_extension(d, set(first.vertices), set(second.vertices))
        result = PartitionResult.of([a, b], completed)
        strategy = "disjoint-cycles"
    completed = result.completed
    assert completed is not None
    if not verify_partition(completed, result) or not result.splits(completed.coalition):
        raise InternalInvariantViolation(f"{strategy} partition failed to break the coalition")
    logger.debug("Coalition of {} broken by {}: {}", base.r, strategy, result.as_lists())
    return result
