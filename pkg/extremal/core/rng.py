"""Seeded 64-bit pseudo random generator with a fixed, published contract.

The generator is xorshift64* seeded through one SplitMix64 scramble. Outputs
for seed 42 start 3580622183945639842, 10378725325292465923,
8967075514996744559, 5001014893397904463.
"""

from __future__ import annotations

from collections.abc import MutableSequence, Sequence
from typing import TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_STAR = 0x2545F4914F6CDD1D


def splitmix64(value: int) -> int:
    """Return the first SplitMix64 output for ``value``."""
    z = (value + _GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    """xorshift64* generator; ``spawn(i)`` derives the sub-stream for ``seed ^ i``."""

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int) -> None:
        if seed < 0:
            raise ValueError("seed must be non-negative")
        self.seed = seed & MASK64
        state = splitmix64(self.seed)
        # xorshift state must never be zero
        self._state = state or _GOLDEN

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self._state = x
        return (x * _STAR) & MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def bernoulli(self, p: float) -> bool:
        return self.random() < p

    def randbelow(self, bound: int) -> int:
        """Unbiased integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def shuffle(self, items: MutableSequence[T]) -> None:
        """Fisher-Yates shuffle in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: Sequence[T], count: int) -> list[T]:
        pool = list(population)
        if count > len(pool):
            raise ValueError("sample larger than population")
        for i in range(count):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]

    def spawn(self, index: int) -> XorShift64Star:
        return XorShift64Star(self.seed ^ (index & MASK64))
