"""Brute-force oracles, and the algorithms checked against them on small inputs."""

from __future__ import annotations

from fractions import Fraction

import pytest

from extremal.cds import Decision, DomState, gen_cycle_of_cliques, psi
from extremal.coalition import CoalitionInstance, coalition_construct
from extremal.core.errors import Disconnected, InfeasibleParameters, InvalidInputError, TooLarge
from extremal.core.rng import XorShift64Star
from extremal.fair import HamiltonNeighborhood, MatchingNeighborhood, local_search, random_partition
from extremal.graphs import INF, Graph, girth, is_connected_subset, is_dominating
from extremal.graphs.generators import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
)
from extremal.oracle import (
    CopyKind,
    OracleBudget,
    all_valid_partitions,
    exact_conditional_expectation,
    exact_fair_optimum,
    exact_gamma,
    exact_gamma_c,
    exact_girth,
    exact_hamming_best,
    exact_pb_cdf,
    minimum_dominating_set,
)
from extremal.prob import L1BallInstance, PoissonBinomial, hamming_center, pb_cdf


@pytest.mark.parametrize(
    "graph",
    [petersen_graph(), complete_graph(4), cycle_graph(9), path_graph(6)],
    ids=["petersen", "K4", "C9", "P6"],
)
def test_exact_girth_agrees_with_bfs_girth(graph: Graph) -> None:
    assert exact_girth(graph) == girth(graph)


def test_exact_girth_of_forest_is_infinite() -> None:
    assert exact_girth(disjoint_union(path_graph(3), path_graph(4))) is INF


def test_exact_girth_is_capped() -> None:
    with pytest.raises(TooLarge):
        exact_girth(cycle_graph(13))
    assert exact_girth(cycle_graph(13), OracleBudget(max_girth_vertices=13)) == 13


def test_domination_numbers_of_a_cycle() -> None:
    c6 = cycle_graph(6)
    dominating = minimum_dominating_set(c6)

    assert exact_gamma(c6) == 2
    assert exact_gamma_c(c6) == 4
    assert dominating == (0, 3)
    assert is_dominating(c6, dominating)


def test_domination_numbers_of_cycle_of_cliques() -> None:
    g = gen_cycle_of_cliques(3, 4)
    connected = minimum_dominating_set(g, connected=True)

    assert exact_gamma(g) == 4
    assert len(connected) == 10
    assert is_dominating(g, connected)
    assert is_connected_subset(g, connected)


def test_petersen_domination_number() -> None:
    assert exact_gamma(petersen_graph()) == 3


def test_connected_domination_needs_connected_graph() -> None:
    g = disjoint_union(cycle_graph(3), cycle_graph(3))

    assert exact_gamma(g) == 2
    with pytest.raises(Disconnected):
        exact_gamma_c(g)


def test_conditional_expectation_without_decisions() -> None:
    expectation = exact_conditional_expectation(path_graph(3), [None] * 3, Fraction(1, 2))

    assert expectation.t == Fraction(3, 2)
    assert expectation.y == Fraction(1, 4) + Fraction(1, 8) + Fraction(1, 4)
    assert expectation.s == expectation.t + expectation.y


def test_conditional_expectation_matches_potential_terms() -> None:
    g = petersen_graph()
    p = Fraction(1, 3)
    fixed = [Decision.IN_T, Decision.NOT_IN_T, Decision.IN_T]
    state = DomState.initial(g.n)
    for v, decision in enumerate(fixed):
        state.decide(v, decision)
    decisions: list[bool | None] = [d is Decision.IN_T for d in fixed] + [None] * (g.n - 3)

    exact = exact_conditional_expectation(g, decisions, p)
    potential = psi(g, state, p)
    assert (exact.t, exact.y, exact.d) == (potential.t, potential.y, potential.d)


def test_all_valid_partitions_of_small_instances() -> None:
    cyclic = CoalitionInstance.build(3, 1, 3, {0: (1,), 1: (2,), 2: (0,)})
    pairs = CoalitionInstance.build(4, 1, 2, {0: (1,), 1: (0,), 2: (3,), 3: (2,)})

    assert [p.as_lists() for p in all_valid_partitions(cyclic)] == [[[0, 1, 2]]]
    assert sorted(p.as_lists() for p in all_valid_partitions(pairs)) == [
        [[0, 1], [2, 3]],
        [[0, 1, 2, 3]],
    ]
    with pytest.raises(InfeasibleParameters):
        list(all_valid_partitions(coalition_construct(1, 3, 5)))


def test_exact_pb_cdf_matches_convolution() -> None:
    rng = XorShift64Star(3)
    probabilities = [Fraction(rng.randbelow(11), 10) for _ in range(6)]
    pb = PoissonBinomial.of(probabilities)

    for d in range(-1, 8):
        assert exact_pb_cdf(probabilities, d) == pb_cdf(pb, d)


@pytest.mark.parametrize(("n", "copies"), [(2, 2), (3, 6), (4, 24)])
def test_matching_optimum_enumerates_every_matching(n: int, copies: int) -> None:
    neighborhood = MatchingNeighborhood(n)
    partition = random_partition(neighborhood.host(), 2, XorShift64Star(n))
    optimum = exact_fair_optimum(partition, CopyKind.MATCHING)
    result = local_search(partition, neighborhood)

    assert optimum.copies == copies
    assert len(optimum.witness) == n
    assert optimum.distance_squared <= result.potential


def test_hamilton_optimum_counts_cycles_of_k5() -> None:
    neighborhood = HamiltonNeighborhood(5)
    partition = random_partition(neighborhood.host(), 3, XorShift64Star(5))
    optimum = exact_fair_optimum(partition, "hamilton")
    result = local_search(partition, neighborhood)

    assert optimum.copies == 12
    assert optimum.distance_squared <= result.potential
    assert optimum.l2 == pytest.approx(float(optimum.distance_squared) ** 0.5)


def test_fair_optimum_rejects_wrong_hosts() -> None:
    partition = random_partition(cycle_graph(6), 2, XorShift64Star(1))

    with pytest.raises(InvalidInputError):
        exact_fair_optimum(partition, CopyKind.HAMILTON)
    with pytest.raises(InvalidInputError):
        exact_fair_optimum(partition, CopyKind.MATCHING)
    with pytest.raises(TooLarge):
        exact_fair_optimum(random_partition(complete_graph(9), 2, XorShift64Star(1)), "hamilton")


def test_exact_hamming_best_dominates_rounding() -> None:
    inst = L1BallInstance(
        center=("1/3", 0, 1, "2/3"),
        radius=1,
        points=((0, 0, 1, 1), (1, 0, 1, 1), (0, 0, 1, 0)),
    )
    y, count = exact_hamming_best(inst)

    assert count == 3
    assert y == (0, 0, 1, 1)
    assert count >= hamming_center(inst).count
