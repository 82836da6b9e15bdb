"""Rounding an l1-ball to a Hamming ball by conditional expectations.

Drawing every coordinate of y independently as a Bernoulli of the clamped
centre makes the Hamming distance to each point a sum of indicators with
mean at most d.  By the median property each point is then covered with
probability at least 1/2, and fixing coordinates one at a time while the
conditional expected cover count never drops yields a deterministic y
covering at least half of the points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
    model_validator,
)

from extremal.core.errors import InternalInvariantViolation, InvalidInputError
from extremal.core.rng import XorShift64Star

BinaryVector = tuple[int, ...]


class L1BallInstance(BaseModel):
    """Binary points inside the l1-ball of radius ``radius`` around ``center``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    center: tuple[Fraction, ...] = Field(..., description="Real centre x, one entry per coordinate")
    radius: int = Field(..., ge=0, description="Ball radius d")
    points: tuple[BinaryVector, ...] = Field(..., description="The set A of binary points")

    @field_validator("center", mode="before")
    @classmethod
    def parse_center(cls, value: Any) -> tuple[Fraction, ...]:
        """Accept ints, floats and strings such as ``"1/3"``."""
        try:
            return tuple(Fraction(v) for v in value)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad centre coordinate: {exc}") from exc

    @field_serializer("center")
    def serialize_center(self, center: tuple[Fraction, ...]) -> list[str]:
        return [str(c) for c in center]

    @model_validator(mode="after")
    def validate_points(self) -> L1BallInstance:
        """Points are distinct binary vectors of the right length inside the ball."""
        n = len(self.center)
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        for a in self.points:
            if len(a) != n or any(bit not in (0, 1) for bit in a):
                raise ValueError(f"point {a} is not a binary vector of length {n}")
            if l1_distance(a, self.center) > self.radius:
                raise ValueError(f"point {a} lies outside the ball")
        return self

    @property
    def n(self) -> int:
        return len(self.center)


def l1_distance(a: BinaryVector, x: tuple[Fraction, ...]) -> Fraction:
    return sum((abs(ai - xi) for ai, xi in zip(a, x, strict=True)), Fraction(0))


def hamming(a: BinaryVector, b: BinaryVector) -> int:
    return sum(1 for ai, bi in zip(a, b, strict=True) if ai != bi)


def clamp_center(x: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Project onto the cube; distances to binary points never grow."""
    return tuple(min(Fraction(1), max(Fraction(0), xi)) for xi in x)


@dataclass(frozen=True, slots=True)
class HammingResult:
    """``y`` and the number of points within Hamming distance d of it.

    ``expectations[i]`` is the conditional expected count after fixing the
    first i coordinates; the last entry equals ``count``.
    """

    y: BinaryVector
    count: int
    total: int
    expectations: tuple[Fraction, ...]

    def meets_guarantee(self) -> bool:
        return 2 * self.count >= self.total


class _SuffixCdf:
    """``Pr[mismatches among coordinates i..n-1 <= t]`` for a point's suffix, memoised."""

    def __init__(self, q: tuple[Fraction, ...]) -> None:
        self.q = q
        self._pmfs: dict[tuple[int, BinaryVector], list[Fraction]] = {}

    def _pmf(self, start: int, suffix: BinaryVector) -> list[Fraction]:
        key = (start, suffix)
        cached = self._pmfs.get(key)
        if cached is not None:
            return cached
        if not suffix:
            pmf = [Fraction(1)]
        else:
            rest = self._pmf(start + 1, suffix[1:])
            qi = self.q[start]
            miss = qi if suffix[0] == 0 else 1 - qi
            pmf = [Fraction(0)] * (len(rest) + 1)
            for j, mass in enumerate(rest):
                pmf[j] += mass * (1 - miss)
                pmf[j + 1] += mass * miss
        self._pmfs[key] = pmf
        return pmf

    def at_most(self, start: int, point: BinaryVector, threshold: int) -> Fraction:
        if threshold < 0:
            return Fraction(0)
        pmf = self._pmf(start, point[start:])
        return sum(pmf[: threshold + 1], Fraction(0))


def hamming_center(inst: L1BallInstance) -> HammingResult:
    """Binary y whose Hamming ball of radius d holds at least half of the points.

    Coordinates are fixed left to right, each to the value with the larger
    conditional expected count; ties go to the rounded clamped centre.
    """
    q = clamp_center(inst.center)
    n, d = inst.n, inst.radius
    cdf = _SuffixCdf(q)
    mismatches = [0] * len(inst.points)
    current = sum((cdf.at_most(0, a, d) for a in inst.points), Fraction(0))
    if 2 * current < len(inst.points):
        raise InternalInvariantViolation(f"initial expectation {current} below half of |A|")
    history = [current]
    y: list[int] = []
    for i in range(n):
        scores: dict[int, Fraction] = {}
        for bit in (0, 1):
            scores[bit] = sum(
                (
                    cdf.at_most(i + 1, a, d - m - (a[i] != bit))
                    for a, m in zip(inst.points, mismatches, strict=True)
                ),
                Fraction(0),
            )
        preferred = 1 if q[i] > Fraction(1, 2) else 0
        bit = preferred if scores[preferred] >= scores[1 - preferred] else 1 - preferred
        if scores[bit] < current:
            raise InternalInvariantViolation(
                f"conditional expectation fell from {current} to {scores[bit]} at coordinate {i}"
            )
        current = scores[bit]
        history.append(current)
        y.append(bit)
        mismatches = [m + (a[i] != bit) for a, m in zip(inst.points, mismatches, strict=True)]
    vector = tuple(y)
    count = sum(1 for a in inst.points if hamming(a, vector) <= d)
    if count != current:
        raise InternalInvariantViolation(f"final count {count} differs from expectation {current}")
    logger.debug("Hamming centre covers {} of {} points", count, len(inst.points))
    return HammingResult(y=vector, count=count, total=len(inst.points), expectations=tuple(history))


def random_ball_instance(
    n: int, radius: int, size: int, rng: XorShift64Star, *, denominator: int = 4
) -> L1BallInstance:
    """Random centre with coordinates in ``[-1/4, 5/4]`` and up to ``size`` points of its ball."""
    center = tuple(
        Fraction(rng.randbelow(denominator + 3) - 1, denominator) for _ in range(n)
    )
    rounded = tuple(1 if c > Fraction(1, 2) else 0 for c in center)
    chosen: set[BinaryVector] = set()
    for _ in range(8 * size):
        if len(chosen) >= size:
            break
        flips = rng.sample(range(n), rng.randbelow(min(radius, n) + 1))
        point = tuple(b ^ (i in flips) for i, b in enumerate(rounded))
        if l1_distance(point, center) <= radius:
            chosen.add(point)
    return L1BallInstance(center=center, radius=radius, points=tuple(sorted(chosen)))


def load_ball_instance(path: Path) -> L1BallInstance:
    """JSON object with ``center`` (numbers or ``"p/q"`` strings), ``radius`` and ``points``."""
    try:
        return L1BallInstance.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    except ValidationError as exc:
        raise InvalidInputError(str(exc)) from exc
