"""Exhaustive coalition verification and the Monte Carlo estimate for five-member coalitions."""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from loguru import logger

from extremal.coalition.breaker import acyclic_completion
from extremal.coalition.instance import CoalitionInstance, PartitionResult
from extremal.core.constants import (
    CLAIM_COALITION_SIZE,
    CLAIM_GOOD_EVENT_BOUND,
    CLAIM_LIST_SIZE,
)
from extremal.core.errors import DomainError, InvalidInputError, TooLarge
from extremal.core.rng import XorShift64Star


class VerificationMode(StrEnum):
    ADVERSARIAL = "adversarial"
    FIXED_COMPLETION = "fixed-completion"


@dataclass(frozen=True, slots=True)
class CoalitionVerdict:
    """Outcome of :func:`verify_coalition_success`.

    ``witness`` is a valid partition splitting R when the coalition fails,
    together with the completion that realises it.
    """

    success: bool
    mode: VerificationMode
    partitions_checked: int
    witness: PartitionResult | None = None

    def __bool__(self) -> bool:
        return self.success


def set_partitions(n: int) -> Iterator[list[int]]:
    """All set partitions of ``0..n-1`` as restricted growth strings.

    ``labels[v]`` is the class of v; classes are numbered in order of first
    appearance.
    """
    if n == 0:
        yield []
        return
    labels = [0] * n
    ceiling = [0] * n
    while True:
        yield list(labels)
        i = n - 1
        while i > 0 and labels[i] == ceiling[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        top = max(ceiling[i - 1], labels[i])
        ceiling[i] = top
        for j in range(i + 1, n):
            labels[j] = 0
            ceiling[j] = top


def _groups(labels: list[int]) -> list[list[int]]:
    parts: list[list[int]] = [[] for _ in range(max(labels) + 1)]
    for v, label in enumerate(labels):
        parts[label].append(v)
    return parts


def _lowest_completion(inst: CoalitionInstance) -> CoalitionInstance:
    extra = {j: [v for v in range(inst.n) if v != j][: inst.k] for j in inst.open_children()}
    return inst.with_choices(extra)


def _fixed_completion(inst: CoalitionInstance) -> CoalitionInstance:
    if inst.is_complete():
        return inst
    if inst.r >= inst.k and all(j < inst.r for j in inst.choices):
        return acyclic_completion(inst)
    return _lowest_completion(inst)


def _realising_completion(inst: CoalitionInstance, labels: list[int]) -> CoalitionInstance:
    """Lists for the open children that make the partition ``labels`` valid."""
    parts = _groups(labels)
    extra: dict[int, list[int]] = {}
    for j in inst.open_children():
        mate = next(v for v in parts[labels[j]] if v != j)
        extra[j] = [mate, *[v for v in range(inst.n) if v not in (j, mate)][: inst.k - 1]]
    return inst.with_choices(extra)


def verify_coalition_success(
    inst: CoalitionInstance,
    coalition: Iterable[int] | None = None,
    *,
    mode: VerificationMode = VerificationMode.ADVERSARIAL,
    max_vertices: int = 10,
) -> CoalitionVerdict:
    """Decide whether the fixed lists force R into a single class.

    Every set partition of the children is examined.  In adversarial mode
    the open lists are quantified: a partition splitting R can be realised
    exactly when each coalition member has a friend in its class and no
    child with an open list sits alone.  In fixed-completion mode the open
    lists are filled once (acyclically when possible) and only partitions
    valid for that completion count.
    """
    members = sorted(inst.coalition if coalition is None else set(coalition))
    if len(members) < 2:
        raise InvalidInputError("a coalition needs at least two members")
    if inst.n > max_vertices:
        raise TooLarge(f"exhaustive verification is limited to n <= {max_vertices}, got {inst.n}")
    if mode is VerificationMode.ADVERSARIAL:
        fixed = {i: inst.choice(i) for i in members}
        open_children = [j for j in range(inst.n) if j not in fixed]
        base = CoalitionInstance.build(
            inst.n, inst.k, inst.r, {i: inst.choices[i] for i in members}
        )
    else:
        base = _fixed_completion(inst)
        fixed = {j: base.choice(j) for j in range(base.n)}
        open_children = []
    checked = 0
    for labels in set_partitions(inst.n):
        checked += 1
        if len({labels[i] for i in members}) < 2:
            continue
        sizes = [0] * (max(labels) + 1)
        for label in labels:
            sizes[label] += 1
        if any(sizes[labels[j]] < 2 for j in open_children):
            continue
        if all(any(labels[f] == labels[i] for f in friends) for i, friends in fixed.items()):
            completed = _realising_completion(base, labels) if open_children else base
            witness = PartitionResult.of(_groups(labels), completed)
            logger.debug("Coalition {} split by {}", members, witness.as_lists())
            return CoalitionVerdict(False, mode, checked, witness)
    return CoalitionVerdict(True, mode, checked)


@dataclass(frozen=True, slots=True)
class ClaimEstimate:
    """Empirical frequency of the good colouring event for a five-member coalition."""

    trials: int
    successes: int
    bound: Fraction

    @property
    def frequency(self) -> float:
        return self.successes / self.trials

    @property
    def sigma(self) -> float:
        b = float(self.bound)
        return math.sqrt(b * (1 - b) / self.trials)

    def meets_bound(self, z: float = 3.0) -> bool:
        return self.frequency >= float(self.bound) - z * self.sigma


def monte_carlo_claim(
    n: int,
    trials: int,
    seed: int,
    *,
    choices: Mapping[int, Iterable[int]] | None = None,
) -> ClaimEstimate:
    """Colour the children red or blue uniformly and count the good event.

    The good event is that R = {0..4} gets both colours and every member of R
    shares a colour with one of its three friends; its probability is at
    least ``1 - 1/16 - 5/8``.  Without ``choices`` the coalition lists are
    drawn from the seed; trial t uses sub-seed ``seed ^ (t + 1)``.
    """
    if trials <= 0:
        raise DomainError("monte_carlo_claim needs at least one trial")
    if n < CLAIM_COALITION_SIZE:
        raise DomainError(f"the claim needs n >= {CLAIM_COALITION_SIZE}, got {n}")
    rng = XorShift64Star(seed)
    if choices is None:
        choices = {
            i: rng.sample([v for v in range(n) if v != i], CLAIM_LIST_SIZE)
            for i in range(CLAIM_COALITION_SIZE)
        }
    inst = CoalitionInstance.build(n, CLAIM_LIST_SIZE, CLAIM_COALITION_SIZE, choices)
    lists = {i: inst.choice(i) for i in range(CLAIM_COALITION_SIZE)}
    relevant = sorted(set(lists).union(*lists.values()))
    successes = 0
    for trial in range(trials):
        stream = rng.spawn(trial + 1)
        colour = {v: stream.randbelow(2) for v in relevant}
        if len({colour[i] for i in lists}) < 2:
            continue
        if all(any(colour[f] == colour[i] for f in friends) for i, friends in lists.items()):
            successes += 1
    estimate = ClaimEstimate(trials, successes, CLAIM_GOOD_EVENT_BOUND)
    logger.debug("Claim frequency {:.4f} over {} trials", estimate.frequency, trials)
    return estimate
