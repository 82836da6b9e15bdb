"""Tests for edge partitions, uniform covers and the fair-representation local search."""

from __future__ import annotations

from fractions import Fraction

import pytest

from extremal.core.errors import EdgeNotInHost, InfeasibleParameters, InvalidInputError
from extremal.core.rng import XorShift64Star
from extremal.fair import (
    EdgePartition,
    HamiltonNeighborhood,
    MatchingNeighborhood,
    SampledNeighborhood,
    TFactorNeighborhood,
    distinct_copies,
    fairness_bound,
    fairness_bound_squared,
    format_partition,
    hamilton_neighborhood,
    linf_distance,
    local_search,
    matching_bound,
    matching_neighborhood,
    parse_partition,
    potential,
    random_partition,
    rep_vector,
    star_counterexample_partition,
    star_edges,
    target_vector,
    tfactor_neighborhood,
)
from extremal.graphs import Graph
from extremal.graphs.generators import complete_bipartite, complete_graph, cycle_graph, path_graph
from extremal.reports import check_fair


def test_fairness_bound_values() -> None:
    assert fairness_bound_squared(2, 2) == 16
    assert fairness_bound_squared(3, 2) == 512
    assert fairness_bound_squared(1, 4) == 0
    assert matching_bound(2) == pytest.approx(4.0)
    assert fairness_bound(3, 2) == pytest.approx(512**0.5)
    with pytest.raises(InfeasibleParameters):
        fairness_bound_squared(0, 2)


def test_target_vector_is_proportional_share() -> None:
    host = cycle_graph(4)
    partition = EdgePartition(host, {(0, 1): 0, (1, 2): 0, (2, 3): 1, (0, 3): 1}, 2)

    assert partition.class_sizes() == (2, 2)
    assert target_vector(partition, 2) == (Fraction(1), Fraction(1))
    assert rep_vector([(0, 1), (1, 2)], partition) == (2, 0)
    assert potential((2, 0), (Fraction(1), Fraction(1))) == 2
    assert linf_distance((2, 0), (Fraction(1), Fraction(1))) == 1


def test_partition_round_trip() -> None:
    host = complete_graph(4)
    partition = random_partition(host, 3, XorShift64Star(8))

    assert parse_partition(format_partition(partition), host) == partition


@pytest.mark.parametrize(
    ("text", "error"),
    [
        ("", InvalidInputError),
        ("x\n0 1 0\n", InvalidInputError),
        ("2\n0 1 0\n1 2 1\n", InvalidInputError),
        ("2\n0 1 0\n1 2 1\n0 2 5\n", InvalidInputError),
        ("2\n0 1 0\n1 2 1\n0 2 1\n0 1 1\n", InvalidInputError),
        ("2\n0 1 0\n1 2 1\n0 2 1\n2 7 0\n", EdgeNotInHost),
        ("2\n0 1 a\n", InvalidInputError),
    ],
    ids=["empty", "header", "missing-edge", "class-range", "duplicate", "foreign-edge", "token"],
)
def test_parse_partition_rejects(text: str, error: type[Exception]) -> None:
    with pytest.raises(error):
        parse_partition(text, complete_graph(3))


def test_matching_moves_swap_two_partners() -> None:
    moves = matching_neighborhood((0, 1, 2))

    assert len(moves) == 3
    assert moves[0].state == (1, 0, 2)
    assert set(moves[0].removed) == {(0, 3), (1, 4)}
    assert set(moves[0].added) == {(0, 4), (1, 3)}


def test_two_opt_cover_size() -> None:
    moves = hamilton_neighborhood(tuple(range(6)))

    assert len(moves) == 6 * 3 // 2
    assert all(sorted(move.state) == list(range(6)) for move in moves)


def test_distinct_copies_counts_labelled_shapes() -> None:
    assert len(distinct_copies(complete_graph(2))) == 1
    assert len(distinct_copies(complete_graph(3))) == 1
    assert len(distinct_copies(path_graph(3))) == 3


def test_move_delta_preserves_size() -> None:
    neighborhood = MatchingNeighborhood(4)
    partition = random_partition(neighborhood.host(), 3, XorShift64Star(1))

    for move in neighborhood.moves(neighborhood.start()):
        assert sum(move.delta(partition)) == 0


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_matching_local_search_meets_bound(seed: int) -> None:
    neighborhood = MatchingNeighborhood(6)
    partition = random_partition(neighborhood.host(), 3, XorShift64Star(seed))
    result = local_search(partition, neighborhood)

    assert sum(result.x) == 6
    assert result.within_bound()
    assert result.certifying
    assert result.width == 2
    edges = sorted(neighborhood.edges(result.state))
    assert all(check.holds for check in check_fair(partition, edges, 2, neighborhood.kind))


def test_hamilton_local_search_meets_bound() -> None:
    neighborhood = HamiltonNeighborhood(7)
    partition = random_partition(neighborhood.host(), 2, XorShift64Star(4))
    result = local_search(partition, neighborhood)

    assert sum(result.x) == 7
    assert result.l2 <= result.bound()
    edges = sorted(neighborhood.edges(result.state))
    assert all(check.holds for check in check_fair(partition, edges, 2, neighborhood.kind))


@pytest.mark.parametrize("pattern", [complete_graph(3), path_graph(3)], ids=["K3", "P3"])
def test_tfactor_local_search_meets_bound(pattern: Graph) -> None:
    neighborhood = TFactorNeighborhood(6, pattern)
    partition = random_partition(neighborhood.host(), 2, XorShift64Star(6))
    result = local_search(partition, neighborhood)

    assert sum(result.x) == 2 * pattern.edge_count
    assert result.width == 3 * pattern.edge_count
    assert result.within_bound()
    edges = sorted(neighborhood.edges(result.state))
    checks = check_fair(partition, edges, result.width, "tfactor", pattern=pattern)
    assert all(check.holds for check in checks)


def test_tfactor_moves_stay_factors() -> None:
    triangle = complete_graph(3)
    cover = TFactorNeighborhood(6, triangle)
    moves = list(tfactor_neighborhood(cover.start(), triangle))

    assert moves
    assert all(cover.is_valid(move.state) for move in moves)
    assert all(len(move.removed) == len(move.added) for move in moves)
    with pytest.raises(InfeasibleParameters):
        next(tfactor_neighborhood(((0, 1, 2), (2, 3, 4)), triangle))


def test_sampled_search_never_certifies() -> None:
    inner = MatchingNeighborhood(5)
    sampled = SampledNeighborhood(inner, 4, seed=3)
    partition = random_partition(inner.host(), 2, XorShift64Star(3))
    result = local_search(partition, sampled)

    assert not result.certifying
    assert sampled.kind == "sampled-matching"
    assert sum(result.x) == 5


def _partition_needing_two_moves(neighborhood: MatchingNeighborhood) -> EdgePartition:
    for seed in range(100):
        partition = random_partition(neighborhood.host(), 3, XorShift64Star(seed))
        if local_search(partition, neighborhood).steps >= 2:
            return partition
    pytest.fail("no partition needs two improving moves")


def test_local_search_respects_max_steps() -> None:
    neighborhood = MatchingNeighborhood(6)
    partition = _partition_needing_two_moves(neighborhood)

    truncated = local_search(partition, neighborhood, max_steps=1)
    full = local_search(partition, neighborhood)

    assert truncated.steps == 1
    assert not truncated.converged
    assert full.converged
    assert full.potential < truncated.potential


def test_local_search_rejects_foreign_partition() -> None:
    partition = random_partition(complete_graph(6), 2, XorShift64Star(0))

    with pytest.raises(InfeasibleParameters):
        local_search(partition, MatchingNeighborhood(3))


def test_neighborhood_preconditions() -> None:
    with pytest.raises(InfeasibleParameters):
        HamiltonNeighborhood(4)
    with pytest.raises(InfeasibleParameters):
        TFactorNeighborhood(7, complete_graph(3))
    with pytest.raises(InfeasibleParameters):
        matching_neighborhood((0, 0, 1))


def test_star_counterexample_misses_a_class() -> None:
    partition = star_counterexample_partition(4)

    for center in range(8):
        x = rep_vector(star_edges(8, center), partition)
        missing = 1 if center < 4 else 0
        assert x[missing] == 0
    y = target_vector(partition, 7)
    assert y[0] == y[1] == Fraction(6 * 7, 28)


def test_knn_host_matches_neighborhood() -> None:
    assert MatchingNeighborhood(3).host() == complete_bipartite(3)
