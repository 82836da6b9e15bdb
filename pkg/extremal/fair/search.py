"""First-improvement descent on ||y - x||^2 over a uniform-cover neighbourhood."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Generic, TypeVar

from loguru import logger

from extremal.core.errors import InfeasibleParameters, InternalInvariantViolation
from extremal.fair.neighborhoods import CoverNeighborhood
from extremal.fair.partition import (
    EdgePartition,
    RepVector,
    TargetVector,
    linf_distance,
    potential,
    rep_vector,
    target_vector,
)

StateT = TypeVar("StateT")


def fairness_bound_squared(m: int, s: int) -> Fraction:
    """Exact square of ``(m - 1) * 2^((m - 2) / 2) * s^m``."""
    if m < 1 or s < 1:
        raise InfeasibleParameters("fairness bound needs m >= 1 and s >= 1")
    return Fraction((m - 1) ** 2 * s ** (2 * m)) * Fraction(2) ** (m - 2)


def fairness_bound(m: int, s: int) -> float:
    """``(m - 1) * 2^((m - 2) / 2) * s^m``, the distance guaranteed at a local minimum."""
    return math.sqrt(fairness_bound_squared(m, s))


def matching_bound(m: int) -> float:
    """Width-2 bound ``(m - 1) * 2^((3m - 2) / 2)``, shared by matchings and Hamilton cycles."""
    return fairness_bound(m, 2)


def tfactor_bound(m: int, t: int, q: int) -> float:
    return fairness_bound(m, q * t)


@dataclass(frozen=True, slots=True)
class LocalSearchResult(Generic[StateT]):
    state: StateT
    x: RepVector
    y: TargetVector
    potential: Fraction
    steps: int
    width: int
    certifying: bool
    converged: bool = True

    @property
    def l2(self) -> float:
        return math.sqrt(self.potential)

    @property
    def linf(self) -> Fraction:
        return linf_distance(self.x, self.y)

    def bound(self) -> float:
        return fairness_bound(len(self.x), self.width)

    def within_bound(self) -> bool:
        """Exact comparison of the squared distance with the squared bound."""
        return self.potential <= fairness_bound_squared(len(self.x), self.width)


def local_search(
    partition: EdgePartition,
    neighborhood: CoverNeighborhood[StateT],
    start: StateT | None = None,
    *,
    max_steps: int | None = None,
) -> LocalSearchResult[StateT]:
    """Move to the first neighbour that strictly lowers ``||y - x||^2`` until none does.

    ``y = (f / g) * x(G, P)`` with f edges in the pattern and g in the host.
    Every accepted move lowers the potential by at least ``1 / g^2``.
    """
    if partition.host != neighborhood.host():
        raise InfeasibleParameters("partition host does not match the neighbourhood host")
    state = neighborhood.start() if start is None else start
    if not neighborhood.is_valid(state):
        raise InfeasibleParameters(f"start state is not a valid {neighborhood.kind} subgraph")
    edges = neighborhood.edges(state)
    x = list(rep_vector(edges, partition))
    y = target_vector(partition, len(edges))
    current = potential(x, y)
    step_floor = Fraction(1, partition.host.edge_count**2)
    steps = 0
    improved = True
    converged = True
    while improved and current:
        improved = False
        for move in neighborhood.moves(state):
            delta = move.delta(partition)
            candidate = [a + d for a, d in zip(x, delta, strict=True)]
            value = potential(candidate, y)
            if value < current:
                if current - value < step_floor:
                    raise InternalInvariantViolation(
                        f"descent step {current - value} below 1/g^2"
                    )
                state, x, current = move.state, candidate, value
                steps += 1
                improved = True
                break
        if improved and current and max_steps is not None and steps >= max_steps:
            logger.warning("Local search stopped after {} steps without converging", steps)
            converged = False
            break
    logger.debug(
        "{} local search finished after {} moves; ||y - x||^2 = {}",
        neighborhood.kind,
        steps,
        current,
    )
    return LocalSearchResult(
        state=state,
        x=tuple(x),
        y=y,
        potential=current,
        steps=steps,
        width=neighborhood.width,
        certifying=neighborhood.certifying,
        converged=converged,
    )
