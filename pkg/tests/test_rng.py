"""Tests for the seeded xorshift64* generator."""

from __future__ import annotations

import pytest

from extremal.core.rng import XorShift64Star, splitmix64


def test_seed_42_reference_stream() -> None:
    rng = XorShift64Star(42)

    assert [rng.next_u64() for _ in range(4)] == [
        3580622183945639842,
        10378725325292465923,
        8967075514996744559,
        5001014893397904463,
    ]


def test_seed_zero_is_scrambled_into_a_nonzero_state() -> None:
    rng = XorShift64Star(0)

    assert [rng.next_u64() for _ in range(4)] == [
        8916199331640804048,
        16032783972208265725,
        12954103179475586193,
        16173463928478733820,
    ]


def test_same_seed_same_stream() -> None:
    first, second = XorShift64Star(7), XorShift64Star(7)

    assert [first.next_u64() for _ in range(16)] == [second.next_u64() for _ in range(16)]


def test_spawn_uses_xored_sub_seed() -> None:
    parent = XorShift64Star(42)
    child = parent.spawn(3)
    direct = XorShift64Star(42 ^ 3)

    assert [child.next_u64() for _ in range(5)] == [direct.next_u64() for _ in range(5)]


def test_outputs_stay_in_range() -> None:
    rng = XorShift64Star(1234)

    for _ in range(500):
        assert 0 <= rng.next_u64() < 2**64
        assert 0.0 <= rng.random() < 1.0
        assert 0 <= rng.randbelow(7) < 7


def test_bernoulli_extremes() -> None:
    rng = XorShift64Star(5)

    assert not any(rng.bernoulli(0.0) for _ in range(50))
    assert all(rng.bernoulli(1.0) for _ in range(50))


def test_shuffle_and_sample_are_permutations() -> None:
    rng = XorShift64Star(99)
    items = list(range(20))
    rng.shuffle(items)
    picked = rng.sample(range(10), 4)

    assert sorted(items) == list(range(20))
    assert len(set(picked)) == 4
    assert all(0 <= value < 10 for value in picked)


def test_invalid_arguments_raise() -> None:
    rng = XorShift64Star(1)

    with pytest.raises(ValueError):
        XorShift64Star(-1)
    with pytest.raises(ValueError):
        rng.randbelow(0)
    with pytest.raises(ValueError):
        rng.sample([1, 2], 3)


def test_splitmix64_is_a_64_bit_mix() -> None:
    assert splitmix64(0) != 0
    assert 0 <= splitmix64(2**64 - 1) < 2**64
