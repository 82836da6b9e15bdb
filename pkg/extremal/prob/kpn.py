"""Vectors of p-th roots of unity and the covering number K(n, p).

A vector in ``B = {1, w, ..., w^(p-1)}^n`` is stored by its exponents.  The
plain scalar product ``sum v_i u_i`` of two such vectors vanishes exactly when
the exponent sums ``a_i + b_i`` hit every residue mod p equally often.
K(n, p) is the least number of vectors whose orthogonal sets cover B.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np
from loguru import logger

from extremal.core.errors import (
    DomainError,
    InfeasibleParameters,
    InternalInvariantViolation,
    InvalidInputError,
    TooLarge,
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % f for f in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True, slots=True)
class RootVector:
    """Coordinates ``w^e`` for the residues ``e`` in ``exponents``; w is a primitive p-th root."""

    exponents: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise DomainError(f"p={self.p} is not prime")
        if any(not 0 <= e < self.p for e in self.exponents):
            raise InvalidInputError(f"exponents must lie in 0..{self.p - 1}")

    def __len__(self) -> int:
        return len(self.exponents)

    def numeric(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.asarray(self.exponents, dtype=float) / self.p)


def _check_pair(v: RootVector, u: RootVector, p: int) -> None:
    if v.p != p or u.p != p:
        raise InvalidInputError("vectors are over different roots of unity")
    if len(v) != len(u):
        raise InvalidInputError(f"length mismatch: {len(v)} vs {len(u)}")


def kpn_cover_relation(v: RootVector, u: RootVector, p: int) -> bool:
    """Exact orthogonality test through equal multiplicity of the exponent sums."""
    _check_pair(v, u, p)
    n = len(v)
    if n % p:
        return False
    counts = Counter((a + b) % p for a, b in zip(v.exponents, u.exponents, strict=True))
    return all(counts[residue] == n // p for residue in range(p))


def kpn_cover_relation_numeric(
    v: RootVector, u: RootVector, p: int, *, tolerance: float = 1e-9
) -> bool:
    """Floating cross-check: ``|sum v_i u_i| < tolerance`` in complex arithmetic."""
    _check_pair(v, u, p)
    return bool(abs(np.sum(v.numeric() * u.numeric())) < tolerance)


def all_root_vectors(n: int, p: int) -> Iterator[RootVector]:
    """Every vector of B in lexicographic exponent order."""
    for exponents in product(range(p), repeat=n):
        yield RootVector(exponents, p)


def hegedus_bound(n: int, p: int) -> int:
    """``K(n, p) >= (p - 1) n``."""
    return (p - 1) * n


def orthogonality_bound(n: int, p: int) -> Fraction:
    """``p^n ((n/p)!)^p / n!``: |B| over the number of vectors orthogonal to any one vector."""
    if n % p:
        raise InfeasibleParameters(f"p={p} must divide n={n}")
    return Fraction(p**n * math.factorial(n // p) ** p, math.factorial(n))


@dataclass(frozen=True, slots=True)
class KpnResult:
    n: int
    p: int
    value: int
    cover: tuple[RootVector, ...]
    nodes: int

    @property
    def lower_bound(self) -> int:
        return max(hegedus_bound(self.n, self.p), math.ceil(orthogonality_bound(self.n, self.p)))


class _CoverSearch:
    """Minimum set cover by depth-first branch and bound.

    Each node branches on the uncovered vector with the fewest candidate
    covers.  A node is cut when the covered count plus the best possible
    remaining coverage cannot beat the incumbent.
    """

    def __init__(self, covers: list[frozenset[int]], universe: int) -> None:
        self.covers = covers
        self.universe = universe
        self.coverers: list[list[int]] = [[] for _ in range(universe)]
        for index, cover in enumerate(covers):
            for element in cover:
                self.coverers[element].append(index)
        self.largest = max(len(c) for c in covers)
        self.best: list[int] | None = None
        self.nodes = 0

    def lower_bound(self, uncovered: int) -> int:
        return -(-uncovered // self.largest)

    def run(self, seed_choice: list[int], upper: list[int]) -> list[int]:
        self.best = list(upper)
        covered: set[int] = set()
        for index in seed_choice:
            covered |= self.covers[index]
        self._branch(list(seed_choice), covered)
        assert self.best is not None
        return self.best

    def _branch(self, chosen: list[int], covered: set[int]) -> None:
        self.nodes += 1
        assert self.best is not None
        uncovered = self.universe - len(covered)
        if uncovered == 0:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
            return
        if len(chosen) + self.lower_bound(uncovered) >= len(self.best):
            return
        target = min(
            (e for e in range(self.universe) if e not in covered),
            key=lambda e: len(self.coverers[e]),
        )
        options = sorted(
            self.coverers[target], key=lambda c: len(self.covers[c] - covered), reverse=True
        )
        for option in options:
            chosen.append(option)
            self._branch(chosen, covered | self.covers[option])
            chosen.pop()


def _greedy_cover(covers: list[frozenset[int]], universe: int, first: int) -> list[int]:
    chosen = [first]
    covered = set(covers[first])
    while len(covered) < universe:
        best = max(range(len(covers)), key=lambda c: (len(covers[c] - covered), -c))
        chosen.append(best)
        covered |= covers[best]
    return chosen


def kpn_bruteforce(n: int, p: int, *, max_vectors: int = 81) -> KpnResult:
    """Exact K(n, p) for small ``p^n``.

    The vector of all ones can be assumed to belong to an optimal cover:
    multiplying a cover coordinatewise by any fixed vector, and the covered
    vectors by its inverse, preserves every scalar product.
    """
    if not is_prime(p):
        raise DomainError(f"p={p} is not prime")
    if n < 1 or n % p:
        raise InfeasibleParameters(f"p={p} must divide n={n}; otherwise nothing is orthogonal")
    size = p**n
    if size > max_vectors:
        raise TooLarge(f"p^n = {size} exceeds the search budget {max_vectors}")
    vectors = list(all_root_vectors(n, p))
    covers = [
        frozenset(j for j, u in enumerate(vectors) if kpn_cover_relation(v, u, p)) for v in vectors
    ]
    search = _CoverSearch(covers, size)
    upper = _greedy_cover(covers, size, 0)
    best = search.run([0], upper)
    result = KpnResult(
        n=n,
        p=p,
        value=len(best),
        cover=tuple(vectors[i] for i in sorted(best)),
        nodes=search.nodes,
    )
    if result.value < result.lower_bound:
        raise InternalInvariantViolation(f"K({n},{p}) = {result.value} violates the lower bound")
    logger.debug("K({},{}) = {} after {} search nodes", n, p, result.value, search.nodes)
    return result
