"""Conditional-expectation potential for the derandomized dominating-set stage.

Every vertex joins T independently with probability p; Y_T is the set of
vertices left undominated by T and S = T ∪ Y_T.  The potential of a partial
decision vector is

    psi = E[|T|] + E[|Y_T|] + f(E[D'])

where ``D' = sum over v in T of 1 / (d_T(v) + 1) + |Y_T|`` charges every
member of Y_T as an isolated vertex.  D' never undercounts the components of
the graph induced on S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from enum import StrEnum
from fractions import Fraction

from extremal.cds.budget import f_nk
from extremal.core.errors import DomainError
from extremal.graphs import Graph

Number = Fraction | Decimal
Contribution = tuple[Number, Number, Number]


class Decision(StrEnum):
    UNDECIDED = "undecided"
    IN_T = "in_t"
    NOT_IN_T = "not_in_t"


class PsiArithmetic(StrEnum):
    """``float`` evaluates in high-precision decimal, ``rational`` rounds p to a dyadic Fraction."""

    FLOAT = "float"
    RATIONAL = "rational"


@dataclass(slots=True)
class DomState:
    """Decisions for vertices ``0..index-1``; the rest are undecided."""

    decisions: list[Decision]
    index: int = 0

    @classmethod
    def initial(cls, n: int) -> DomState:
        return cls([Decision.UNDECIDED] * n, 0)

    def is_valid(self) -> bool:
        head = self.decisions[: self.index]
        tail = self.decisions[self.index :]
        return Decision.UNDECIDED not in head and all(d is Decision.UNDECIDED for d in tail)

    def decide(self, vertex: int, decision: Decision) -> None:
        if vertex != self.index or decision is Decision.UNDECIDED:
            raise DomainError(f"vertex {vertex} cannot be decided at step {self.index}")
        self.decisions[vertex] = decision
        self.index += 1

    def members(self) -> list[int]:
        return [v for v, d in enumerate(self.decisions) if d is Decision.IN_T]


@dataclass(frozen=True, slots=True)
class Potential:
    """Components of psi: ``t`` = E|T|, ``y`` = E|Y_T|, ``d`` = E[D'], ``f`` = f(max(d, 1))."""

    t: Number
    y: Number
    d: Number
    f: Number

    @property
    def total(self) -> Number:
        return self.t + self.y + self.f


def selection_probability(
    k: int, arithmetic: PsiArithmetic, *, precision: int = 40, p_bits: int = 40
) -> Number:
    """``p = ln(k + 1) / (k + 1)`` as a Decimal or as the nearest multiple of ``2^-p_bits``."""
    if k < 1:
        raise DomainError("selection probability needs minimum degree k >= 1")
    with localcontext() as ctx:
        ctx.prec = max(precision, p_bits)
        value = Decimal(k + 1).ln() / (k + 1)
        if arithmetic is PsiArithmetic.FLOAT:
            return +value
        scale = 1 << p_bits
        return Fraction(int((value * scale).to_integral_value()), scale)


@dataclass(slots=True)
class _Terms:
    p: Number
    one: Number
    inverse_cache: dict[tuple[int, int], Number] = field(default_factory=dict)
    power_cache: dict[int, Number] = field(default_factory=dict)

    def miss(self, s: int) -> Number:
        """``(1 - p)^s``."""
        cached = self.power_cache.get(s)
        if cached is None:
            cached = (self.one - self.p) ** s
            self.power_cache[s] = cached
        return cached

    def inverse_degree(self, q: int, s: int) -> Number:
        """``E[1 / (q + 1 + A)]`` with ``A ~ Bin(s, p)``."""
        key = (q, s)
        cached = self.inverse_cache.get(key)
        if cached is None:
            total = self.one * 0
            for a in range(s + 1):
                total += math.comb(s, a) * self.p**a * self.miss(s - a) / (q + 1 + a)
            cached = total
            self.inverse_cache[key] = cached
        return cached

    def vertex(self, status: Decision, in_t: int, undecided: int) -> Contribution:
        """Contributions of one vertex to E|T|, E|Y_T| and E[D'].

        ``in_t`` and ``undecided`` count open neighbours by decision.
        """
        zero = self.one * 0
        if status is Decision.IN_T:
            t = self.one
        elif status is Decision.NOT_IN_T:
            t = zero
        else:
            t = self.p
        if status is Decision.IN_T or in_t:
            y = zero
        else:
            y = self.miss(undecided + (status is Decision.UNDECIDED))
        d = y if t == 0 else t * self.inverse_degree(in_t, undecided) + y
        return t, y, d


def _combine(n: int, k: int, t: Number, y: Number, d: Number) -> Potential:
    argument = d if d >= 1 else d * 0 + 1
    return Potential(t=t, y=y, d=d, f=f_nk(n, k, argument))  # type: ignore[arg-type]


def psi(g: Graph, state: DomState, p: Number) -> Potential:
    """Full recomputation of the potential for a decision state."""
    terms = _Terms(p=p, one=p * 0 + 1)
    total_t = total_y = total_d = p * 0
    decisions = state.decisions
    for v in range(g.n):
        in_t = sum(1 for w in g.adjacency[v] if decisions[w] is Decision.IN_T)
        undecided = sum(1 for w in g.adjacency[v] if decisions[w] is Decision.UNDECIDED)
        t, y, d = terms.vertex(decisions[v], in_t, undecided)
        total_t += t
        total_y += y
        total_d += d
    return _combine(g.n, g.min_degree(), total_t, total_y, total_d)


class PsiTracker:
    """Incremental potential: deciding one vertex only touches its closed neighbourhood."""

    def __init__(self, g: Graph, p: Number) -> None:
        self.g = g
        self.k = g.min_degree()
        self.state = DomState.initial(g.n)
        self._terms = _Terms(p=p, one=p * 0 + 1)
        self._in_t = [0] * g.n
        self._undecided = [g.degree(v) for v in range(g.n)]
        self._cached = [
            self._terms.vertex(Decision.UNDECIDED, 0, self._undecided[v]) for v in range(g.n)
        ]
        zero = p * 0
        self._sums = [sum((c[i] for c in self._cached), zero) for i in range(3)]

    def potential(self) -> Potential:
        t, y, d = self._sums
        return _combine(self.g.n, self.k, t, y, d)

    def _changes(self, w: int, decision: Decision) -> list[tuple[int, Contribution]]:
        decisions = self.state.decisions
        changes: list[tuple[int, Contribution]] = []
        for v in self.g.closed_neighborhood(w):
            status = decision if v == w else decisions[v]
            in_t, undecided = self._in_t[v], self._undecided[v]
            if v != w:
                undecided -= 1
                in_t += decision is Decision.IN_T
            changes.append((v, self._terms.vertex(status, in_t, undecided)))
        return changes

    def evaluate(self, w: int, decision: Decision) -> Potential:
        sums = list(self._sums)
        for v, new in self._changes(w, decision):
            old = self._cached[v]
            for i in range(3):
                sums[i] += new[i] - old[i]
        return _combine(self.g.n, self.k, sums[0], sums[1], sums[2])

    def commit(self, w: int, decision: Decision) -> None:
        for v, new in self._changes(w, decision):
            old = self._cached[v]
            for i in range(3):
                self._sums[i] += new[i] - old[i]
            self._cached[v] = new
        for v in self.g.adjacency[w]:
            self._undecided[v] -= 1
            self._in_t[v] += decision is Decision.IN_T
        self.state.decide(w, decision)
