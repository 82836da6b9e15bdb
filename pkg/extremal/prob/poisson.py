"""Exact Poisson-binomial distribution and the median property of sums of indicators."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from extremal.core.errors import DomainError

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class PoissonBinomial:
    """Sum of independent indicators with success probabilities ``probabilities``.

    Floats are converted to the exact binary fraction they hold, so every
    computation below is exact.
    """

    probabilities: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        for p in self.probabilities:
            if not 0 <= p <= 1:
                raise DomainError(f"probability {p} outside [0, 1]")

    @classmethod
    def of(cls, probabilities: Iterable[Fraction | float | int]) -> PoissonBinomial:
        return cls(tuple(Fraction(p) for p in probabilities))

    def __len__(self) -> int:
        return len(self.probabilities)


def pb_pmf(pb: PoissonBinomial) -> list[Fraction]:
    """``Pr[X = j]`` for ``j = 0..n`` by multiplying out ``prod (1 - p + p z)``."""
    pmf = [Fraction(1)]
    for p in pb.probabilities:
        q = 1 - p
        nxt = [Fraction(0)] * (len(pmf) + 1)
        for j, mass in enumerate(pmf):
            nxt[j] += mass * q
            nxt[j + 1] += mass * p
        pmf = nxt
    return pmf


def pb_pmf_numeric(pb: PoissonBinomial) -> np.ndarray:
    """Floating-point pmf by repeated convolution."""
    pmf = np.array([1.0])
    for p in pb.probabilities:
        pmf = np.convolve(pmf, [1.0 - float(p), float(p)])
    return pmf


def pb_cdf(pb: PoissonBinomial, d: int) -> Fraction:
    """``Pr[X <= d]``."""
    if d < 0:
        return Fraction(0)
    if d >= len(pb):
        return Fraction(1)
    return sum(pb_pmf(pb)[: d + 1], Fraction(0))


def pb_mean(pb: PoissonBinomial) -> Fraction:
    return sum(pb.probabilities, Fraction(0))


def medians(pb: PoissonBinomial) -> list[int]:
    """Every m with ``Pr[X <= m] >= 1/2`` and ``Pr[X >= m] >= 1/2``."""
    pmf = pb_pmf(pb)
    found: list[int] = []
    below = Fraction(0)
    for m, mass in enumerate(pmf):
        at_most = below + mass
        at_least = 1 - below
        if at_most >= HALF and at_least >= HALF:
            found.append(m)
        below = at_most
    return found


def median_check(pb: PoissonBinomial) -> bool:
    """True iff the floor or the ceiling of the mean is a median."""
    mu = pb_mean(pb)
    candidates = {math.floor(mu), math.ceil(mu)}
    return any(m in candidates for m in medians(pb))


def binomial_median_check(n: int, p: Fraction | float) -> bool:
    """Median property for ``Bin(n, p)``, whose medians are ``floor(np)`` or ``ceil(np)``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return median_check(PoissonBinomial.of([p] * n))
