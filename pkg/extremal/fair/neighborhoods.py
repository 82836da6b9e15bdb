"""Uniform-cover neighbourhoods for matchings, Hamilton cycles and T-factors.

Each neighbourhood knows its canonical start subgraph, the edges of a state,
and how to enumerate the states one cover member away together with the
edges that leave and enter.  Enumeration order is canonical so the first
improving move found by the local search is reproducible.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial
from typing import Generic, TypeVar

from extremal.core.errors import InfeasibleParameters
from extremal.core.rng import XorShift64Star
from extremal.fair.partition import Edge, EdgePartition, edge_key
from extremal.graphs import Graph
from extremal.graphs.generators import complete_bipartite, complete_graph

StateT = TypeVar("StateT")

Matching = tuple[int, ...]
CycleOrder = tuple[int, ...]
Block = tuple[int, ...]
Factor = tuple[Block, ...]


@dataclass(frozen=True, slots=True)
class Move(Generic[StateT]):
    """A cover member reached from the current state."""

    state: StateT
    removed: tuple[Edge, ...]
    added: tuple[Edge, ...]

    def delta(self, partition: EdgePartition) -> tuple[int, ...]:
        """The vector v_{H'} with x(H', P) = x(H, P) + v_{H'}."""
        change = [0] * partition.m
        for u, v in self.removed:
            change[partition.color_of(u, v)] -= 1
        for u, v in self.added:
            change[partition.color_of(u, v)] += 1
        return tuple(change)


class CoverNeighborhood(ABC, Generic[StateT]):
    """A uniform cover of width ``width`` around every state of one pattern."""

    kind: str
    certifying: bool = True

    @property
    @abstractmethod
    def width(self) -> int: ...

    @abstractmethod
    def host(self) -> Graph: ...

    @abstractmethod
    def start(self) -> StateT: ...

    @abstractmethod
    def edges(self, state: StateT) -> frozenset[Edge]: ...

    @abstractmethod
    def moves(self, state: StateT) -> Iterator[Move[StateT]]: ...

    @abstractmethod
    def random_move(self, state: StateT, rng: XorShift64Star) -> Move[StateT]: ...

    @abstractmethod
    def is_valid(self, state: StateT) -> bool: ...

    def edge_count(self) -> int:
        return len(self.edges(self.start()))


class MatchingNeighborhood(CoverNeighborhood[Matching]):
    """Perfect matchings of K_{n,n}; ``sigma[i] = j`` matches a_i = i with b_j = n + j.

    Members swap the partners of two left vertices, C(n, 2) of them.
    """

    kind = "matching"

    def __init__(self, n: int) -> None:
        if n < 1:
            raise InfeasibleParameters("K_{n,n} needs n >= 1")
        self.n = n

    @property
    def width(self) -> int:
        return 2

    def host(self) -> Graph:
        return complete_bipartite(self.n)

    def start(self) -> Matching:
        return tuple(range(self.n))

    def edges(self, state: Matching) -> frozenset[Edge]:
        return frozenset((i, self.n + j) for i, j in enumerate(state))

    def _swap(self, state: Matching, i: int, j: int) -> Move[Matching]:
        si, sj = state[i], state[j]
        new = list(state)
        new[i], new[j] = sj, si
        n = self.n
        return Move(
            tuple(new),
            removed=((i, n + si), (j, n + sj)),
            added=((i, n + sj), (j, n + si)),
        )

    def moves(self, state: Matching) -> Iterator[Move[Matching]]:
        for i, j in combinations(range(self.n), 2):
            yield self._swap(state, i, j)

    def random_move(self, state: Matching, rng: XorShift64Star) -> Move[Matching]:
        i, j = sorted(rng.sample(range(self.n), 2))
        return self._swap(state, i, j)

    def is_valid(self, state: Matching) -> bool:
        return sorted(state) == list(range(self.n))


class HamiltonNeighborhood(CoverNeighborhood[CycleOrder]):
    """Hamilton cycles of K_n as vertex orders; members are the n(n-3)/2 two-opt moves."""

    kind = "hamilton"

    def __init__(self, n: int) -> None:
        if n < 5:
            raise InfeasibleParameters("the two-opt cover needs n >= 5")
        self.n = n

    @property
    def width(self) -> int:
        return 2

    def host(self) -> Graph:
        return complete_graph(self.n)

    def start(self) -> CycleOrder:
        return tuple(range(self.n))

    def edges(self, state: CycleOrder) -> frozenset[Edge]:
        n = len(state)
        return frozenset(edge_key(state[i], state[(i + 1) % n]) for i in range(n))

    def _pairs(self) -> Iterator[tuple[int, int]]:
        n = self.n
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                yield i, j

    def _two_opt(self, state: CycleOrder, i: int, j: int) -> Move[CycleOrder]:
        n = self.n
        a, b = state[i], state[i + 1]
        c, d = state[j], state[(j + 1) % n]
        new = state[: i + 1] + tuple(reversed(state[i + 1 : j + 1])) + state[j + 1 :]
        return Move(
            new,
            removed=(edge_key(a, b), edge_key(c, d)),
            added=(edge_key(a, c), edge_key(b, d)),
        )

    def moves(self, state: CycleOrder) -> Iterator[Move[CycleOrder]]:
        for i, j in self._pairs():
            yield self._two_opt(state, i, j)

    def random_move(self, state: CycleOrder, rng: XorShift64Star) -> Move[CycleOrder]:
        while True:
            i, j = sorted(rng.sample(range(self.n), 2))
            if j - i >= 2 and not (i == 0 and j == self.n - 1):
                return self._two_opt(state, i, j)

    def is_valid(self, state: CycleOrder) -> bool:
        return sorted(state) == list(range(self.n))


def distinct_copies(pattern: Graph) -> list[tuple[int, ...]]:
    """Vertex orders of a block giving pairwise distinct labelled copies of ``pattern``.

    A copy maps pattern vertex ``a`` to block position ``perm[a]``; orders
    related by an automorphism give the same edge set and are dropped.
    """
    seen: set[frozenset[Edge]] = set()
    copies: list[tuple[int, ...]] = []
    for perm in permutations(range(pattern.n)):
        shape = frozenset(edge_key(perm[a], perm[b]) for a, b in pattern.edges())
        if shape not in seen:
            seen.add(shape)
            copies.append(perm)
    return copies


class TFactorNeighborhood(CoverNeighborhood[Factor]):
    """T-factors of K_n as tuples of labelled blocks.

    Blocks are stored so that position ``i`` of a block hosts pattern vertex
    ``i``.  The cover is the union of two families: every block replaced by
    each distinct copy of T on the same vertices, and every choice of t
    blocks re-split into t transversal blocks carrying any copies of T.
    When fewer than t blocks exist the second family re-splits the whole
    vertex set in every possible way.
    """

    kind = "tfactor"

    def __init__(self, n: int, pattern: Graph) -> None:
        t = pattern.n
        if t < 2 or n % t:
            raise InfeasibleParameters(f"pattern size {t} must divide n={n}")
        if pattern.edge_count == 0:
            raise InfeasibleParameters("the pattern needs at least one edge")
        self.n = n
        self.pattern = pattern
        self.t = t
        self.q = pattern.edge_count
        self.copies = distinct_copies(pattern)

    @property
    def width(self) -> int:
        return self.q * self.t

    def host(self) -> Graph:
        return complete_graph(self.n)

    def start(self) -> Factor:
        t = self.t
        return tuple(tuple(range(b * t, (b + 1) * t)) for b in range(self.n // t))

    def block_edges(self, block: Block) -> list[Edge]:
        return [edge_key(block[a], block[b]) for a, b in self.pattern.edges()]

    def edges(self, state: Factor) -> frozenset[Edge]:
        return frozenset(edge for block in state for edge in self.block_edges(block))

    def _relabel(self, vertices: Block, perm: tuple[int, ...]) -> Block:
        return tuple(vertices[perm[a]] for a in range(self.t))

    def _replace(self, state: Factor, chosen: tuple[int, ...], blocks: list[Block]) -> Move[Factor]:
        new = list(state)
        removed: list[Edge] = []
        for index in chosen:
            removed.extend(self.block_edges(state[index]))
        added = [edge for block in blocks for edge in self.block_edges(block)]
        # the replacement blocks take over the chosen slots in order
        for index, block in zip(chosen, blocks, strict=True):
            new[index] = block
        return Move(tuple(new), removed=tuple(removed), added=tuple(added))

    def relabel_moves(self, state: Factor) -> Iterator[Move[Factor]]:
        for index, block in enumerate(state):
            base = tuple(sorted(block))
            for perm in self.copies:
                yield self._replace(state, (index,), [self._relabel(base, perm)])

    def _transversal_splits(self, groups: list[Block]) -> Iterator[list[Block]]:
        first, rest = groups[0], groups[1:]
        orders = list(permutations(range(self.t)))
        for choice in product(orders, repeat=len(rest)):
            split: list[Block] = []
            for j in range(self.t):
                members = [first[j]]
                members.extend(group[order[j]] for group, order in zip(rest, choice, strict=True))
                split.append(tuple(sorted(members)))
            yield split

    def _all_splits(self, vertices: list[int]) -> Iterator[list[Block]]:
        if not vertices:
            yield []
            return
        head, tail = vertices[0], vertices[1:]
        for mates in combinations(tail, self.t - 1):
            block = (head, *mates)
            remaining = [v for v in tail if v not in mates]
            for others in self._all_splits(remaining):
                yield [block, *others]

    def _splits(self, state: Factor) -> Iterator[tuple[tuple[int, ...], list[Block]]]:
        blocks = len(state)
        if blocks >= self.t:
            for chosen in combinations(range(blocks), self.t):
                groups = [tuple(sorted(state[i])) for i in chosen]
                for split in self._transversal_splits(groups):
                    yield chosen, split
        elif blocks > 1:
            chosen = tuple(range(blocks))
            for split in self._all_splits(sorted(v for block in state for v in block)):
                yield chosen, split

    def resplit_moves(self, state: Factor) -> Iterator[Move[Factor]]:
        for chosen, split in self._splits(state):
            for perms in product(self.copies, repeat=len(split)):
                blocks = [self._relabel(b, p) for b, p in zip(split, perms, strict=True)]
                yield self._replace(state, chosen, blocks)

    def moves(self, state: Factor) -> Iterator[Move[Factor]]:
        yield from self.relabel_moves(state)
        yield from self.resplit_moves(state)

    def resplit_count(self, blocks: int) -> int:
        """Size of the second family for a factor with ``blocks`` blocks."""
        t, c = self.t, len(self.copies)
        if blocks >= t:
            return _binomial(blocks, t) * factorial(t) ** (t - 1) * c**t
        if blocks <= 1:
            return 0
        splits = factorial(blocks * t) // (factorial(t) ** blocks * factorial(blocks))
        return splits * c**blocks

    def random_move(self, state: Factor, rng: XorShift64Star) -> Move[Factor]:
        blocks = len(state)
        if blocks < self.t or rng.bernoulli(0.5):
            index = rng.randbelow(blocks)
            perm = self.copies[rng.randbelow(len(self.copies))]
            block = self._relabel(tuple(sorted(state[index])), perm)
            return self._replace(state, (index,), [block])
        chosen = tuple(sorted(rng.sample(range(blocks), self.t)))
        groups = [sorted(state[i]) for i in chosen]
        for group in groups[1:]:
            rng.shuffle(group)
        split = [tuple(sorted(group[j] for group in groups)) for j in range(self.t)]
        perms = [self.copies[rng.randbelow(len(self.copies))] for _ in split]
        blocks = [self._relabel(b, p) for b, p in zip(split, perms, strict=True)]
        return self._replace(state, chosen, blocks)

    def is_valid(self, state: Factor) -> bool:
        vertices = sorted(v for block in state for v in block)
        return vertices == list(range(self.n)) and all(len(block) == self.t for block in state)


def _binomial(n: int, k: int) -> int:
    return factorial(n) // (factorial(k) * factorial(n - k))


class SampledNeighborhood(CoverNeighborhood[StateT]):
    """Seeded random subsample of another neighbourhood; never certifies the bound."""

    certifying = False

    def __init__(self, inner: CoverNeighborhood[StateT], sample_size: int, seed: int) -> None:
        self.inner = inner
        self.sample_size = sample_size
        self.kind = f"sampled-{inner.kind}"
        self._rng = XorShift64Star(seed)

    @property
    def width(self) -> int:
        return self.inner.width

    def host(self) -> Graph:
        return self.inner.host()

    def start(self) -> StateT:
        return self.inner.start()

    def edges(self, state: StateT) -> frozenset[Edge]:
        return self.inner.edges(state)

    def moves(self, state: StateT) -> Iterator[Move[StateT]]:
        for _ in range(self.sample_size):
            yield self.inner.random_move(state, self._rng)

    def random_move(self, state: StateT, rng: XorShift64Star) -> Move[StateT]:
        return self.inner.random_move(state, rng)

    def is_valid(self, state: StateT) -> bool:
        return self.inner.is_valid(state)


def matching_neighborhood(matching: Matching) -> list[Move[Matching]]:
    """All two-swap neighbours of a perfect matching of K_{n,n}."""
    cover = MatchingNeighborhood(len(matching))
    if not cover.is_valid(matching):
        raise InfeasibleParameters("not a perfect matching")
    return list(cover.moves(matching))


def hamilton_neighborhood(cycle: CycleOrder) -> list[Move[CycleOrder]]:
    """All two-opt neighbours of a Hamilton cycle of K_n."""
    cover = HamiltonNeighborhood(len(cycle))
    if not cover.is_valid(cycle):
        raise InfeasibleParameters("not a Hamilton cycle order")
    return list(cover.moves(cycle))


def tfactor_neighborhood(factor: Factor, pattern: Graph) -> Iterator[Move[Factor]]:
    """Lazy enumeration of both cover families around a T-factor."""
    n = sum(len(block) for block in factor)
    cover = TFactorNeighborhood(n, pattern)
    if not cover.is_valid(factor):
        raise InfeasibleParameters("not a T-factor of K_n")
    return cover.moves(factor)
