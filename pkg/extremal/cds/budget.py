"""The f_{n,k} connection budget and the closed-form bounds around it."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import overload

from extremal.core.errors import DomainError
from extremal.graphs import Graph


@overload
def f_nk(n: int, k: int, x: Decimal) -> Decimal: ...


@overload
def f_nk(n: int, k: int, x: int | Fraction) -> Fraction: ...


def f_nk(n: int, k: int, x: int | Fraction | Decimal) -> Fraction | Decimal:
    """Extra vertices needed to connect a dominating set whose induced graph has x components.

    With ``L = n / (k + 1)`` write ``x = (y + z) L`` for an integer ``y >= 0``
    and ``z`` in ``[0, 1]``.  Then ``f = 2Lz - 2`` when ``y = 0`` and
    ``f = L(z/y + 1/(y-1) + ... + 1/1 + 2) - 2`` otherwise.  The function is
    continuous, piecewise linear, increasing and concave with ``f(1) = 0``.
    Integer and Fraction arguments give exact Fractions; Decimal arguments
    are evaluated in the active decimal context.
    """
    if x < 1:
        raise DomainError(f"f_nk is defined for x >= 1, got {x}")
    if n < 1 or k < 0:
        raise DomainError(f"f_nk needs n >= 1 and k >= 0, got n={n}, k={k}")
    if isinstance(x, Decimal):
        scale_d = Decimal(n) / (k + 1)
        ratio_d = x / scale_d
        y = int(ratio_d)
        z_d = ratio_d - y
        if y == 0:
            return 2 * scale_d * z_d - 2
        harmonic_d = sum((Decimal(1) / j for j in range(1, y)), Decimal(0))
        return scale_d * (z_d / y + harmonic_d + 2) - 2
    scale = Fraction(n, k + 1)
    ratio = Fraction(x) / scale
    y = int(ratio)
    z = ratio - y
    if y == 0:
        return 2 * scale * z - 2
    harmonic = sum((Fraction(1, j) for j in range(1, y)), Fraction(0))
    return scale * (z / y + harmonic + 2) - 2


def binom_inv_expectation(k: int, p: float) -> float:
    """``E[1 / (B(k, p) + 1)] = (1 - (1 - p)^(k + 1)) / ((k + 1) p)``."""
    if not 0 < p < 1:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    if k < 0:
        raise DomainError("k must be non-negative")
    return -math.expm1((k + 1) * math.log1p(-p)) / ((k + 1) * p)


def binom_inv_expectation_sum(k: int, p: float) -> float:
    """Direct summation of ``sum_i C(k, i) p^i (1 - p)^(k - i) / (i + 1)``."""
    if not 0 < p < 1:
        raise DomainError(f"p must lie in (0, 1), got {p}")
    return math.fsum(
        math.comb(k, i) * p**i * (1 - p) ** (k - i) / (i + 1) for i in range(k + 1)
    )


def component_bound(g: Graph, s: Iterable[int]) -> Fraction:
    """``D(H) = sum over v in S of 1 / (d_H(v) + 1)`` for H induced on S.

    Never smaller than the number of components of H.
    """
    members = set(s)
    return sum(
        (Fraction(1, len(members.intersection(g.neighbor_set(v))) + 1) for v in members),
        Fraction(0),
    )


@dataclass(frozen=True, slots=True)
class DominationBounds:
    """Upper bounds for a connected graph on n vertices with minimum degree k."""

    n: int
    k: int
    gamma: float
    connected_loglog: float
    additive_gap: float
    connected: float

    def connected_floor(self) -> int:
        return math.floor(self.connected)


def domination_bounds(n: int, k: int) -> DominationBounds:
    """The classic γ bound and the three γ_c bounds.

    ``gamma``: ``n (ln(k+1) + 1) / (k+1)``.
    ``connected_loglog``: ``n (ln(k+1) + ln ceil(ln(k+1)) + 4) / (k+1)``.
    ``additive_gap``: ``n / (k+1) * (ln ceil(ln(k+1)) + 3)``, the excess of γ_c over γ.
    ``connected``: ``n / (k+1) * (ln(k+1) + 4) - 2``.
    """
    if k < 1:
        raise DomainError("domination bounds need minimum degree k >= 1")
    log_k = math.log(k + 1)
    log_log = math.log(math.ceil(log_k))
    scale = n / (k + 1)
    return DominationBounds(
        n=n,
        k=k,
        gamma=scale * (log_k + 1),
        connected_loglog=scale * (log_k + log_log + 4),
        additive_gap=scale * (log_log + 3),
        connected=scale * (log_k + 4) - 2,
    )
