"""Tests for edge-disjoint packing and the girth-improving swap search."""

from __future__ import annotations

import pytest

from extremal.core.errors import InfeasibleParameters, PackingInfeasibleHint, PreconditionError
from extremal.graphs import INF, girth
from extremal.graphs.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    perfect_matching_graph,
)
from extremal.packing import (
    PackingTrace,
    Placement,
    combined_graph,
    count_conflicts,
    girth_target,
    hamilton_union_high_girth,
    improve_girth,
    is_hamilton_cycle,
    max_k_bound,
    min_girth,
    pack_high_girth,
    sauer_spencer_pack,
)
from extremal.reports import check_hamilton_layers, check_packing


@pytest.mark.parametrize(
    ("d1", "d2", "n", "expected"),
    [(2, 2, 100, 3), (2, 2, 1000, 5), (2, 2, 5, 0), (1, 0, 50, 50), (3, 3, 1000, 4)],
)
def test_max_k_bound(d1: int, d2: int, n: int, expected: int) -> None:
    assert max_k_bound(d1, d2, n) == expected


def test_girth_target_reads_forest_girth_as_n_plus_one() -> None:
    assert girth_target(INF, 4, 10) == 4
    assert girth_target(INF, 50, 10) == 11
    assert girth_target(5, 7, 10) == 5
    assert min_girth(INF, 6) == 6
    assert min_girth(4, INF) == 4
    assert min_girth(INF, INF) is INF


def test_placement_requires_bijections() -> None:
    with pytest.raises(PreconditionError):
        Placement((0, 0, 1), (0, 1, 2))
    swapped = Placement.identity(4).with_f1_swapped(0, 3)
    assert swapped.f1 == (3, 1, 2, 0)
    assert swapped.preimage_f1(3) == 0


def test_identity_placement_of_a_graph_with_itself_conflicts() -> None:
    c = cycle_graph(8)

    assert count_conflicts(c, c, Placement.identity(8)) == 8
    with pytest.raises(PreconditionError):
        combined_graph(c, c, Placement.identity(8))


def test_sauer_spencer_pack_finds_disjoint_cycles() -> None:
    c = cycle_graph(30)
    placement = sauer_spencer_pack(c, c, seed=3)

    assert count_conflicts(c, c, placement) == 0
    combined = combined_graph(c, c, placement)
    assert combined.host.edge_count == 60
    assert combined.host.min_degree() == combined.host.max_degree() == 4


def test_sauer_spencer_pack_rejects_dense_inputs() -> None:
    with pytest.raises(PackingInfeasibleHint):
        sauer_spencer_pack(cycle_graph(8), cycle_graph(8))


def test_improve_girth_reaches_target_from_any_packing() -> None:
    c = cycle_graph(200)
    start = sauer_spencer_pack(c, c, seed=5)
    trace = PackingTrace(target=0)

    improved = improve_girth(c, c, start, 200, 4, trace=trace)

    assert trace.target == 4
    assert count_conflicts(c, c, improved) == 0
    assert girth(combined_graph(c, c, improved).host) >= 4
    assert trace.is_strictly_decreasing()
    assert improved.f2 == start.f2


def test_improve_girth_needs_a_valid_start() -> None:
    c = cycle_graph(20)

    with pytest.raises(InfeasibleParameters):
        improve_girth(c, c, Placement.identity(20), 20, 3)


def test_pack_high_girth_on_two_cycles() -> None:
    c = cycle_graph(100)
    trace = PackingTrace(target=0)
    combined = pack_high_girth(c, c, seed=42, trace=trace)

    assert combined.k_bound == 3
    assert combined.guaranteed_girth == 3
    assert girth(combined.host) >= 3
    assert trace.is_strictly_decreasing()
    assert all(check.holds for check in check_packing(combined, (c, c)))


def test_pack_high_girth_mixed_guests() -> None:
    matching = perfect_matching_graph(60)
    c = cycle_graph(60)
    combined = pack_high_girth(matching, c, seed=7)

    assert combined.k_bound == max_k_bound(1, 2, 60)
    assert combined.guaranteed_girth == min(60, combined.k_bound)
    assert all(check.holds for check in check_packing(combined, (matching, c)))


def test_pack_high_girth_is_deterministic() -> None:
    c = cycle_graph(40)
    first = pack_high_girth(c, c, seed=5)
    second = pack_high_girth(c, c, seed=5)

    assert first.host == second.host
    assert first.placement == second.placement


def test_pack_high_girth_rejects_mismatched_orders() -> None:
    with pytest.raises(InfeasibleParameters):
        pack_high_girth(cycle_graph(10), path_graph(11))


def test_pack_forest_guests_keeps_target_above_zero() -> None:
    p = path_graph(50)
    combined = pack_high_girth(p, p, seed=1)

    assert combined.guaranteed_girth == girth_target(INF, max_k_bound(2, 2, 50), 50)
    assert all(check.holds for check in check_packing(combined, (p, p)))


def test_dense_pair_returns_plain_packing() -> None:
    matching, path = perfect_matching_graph(4), path_graph(4)
    combined = pack_high_girth(matching, path, seed=2)

    assert combined.k_bound == 0
    assert combined.host.edge_count == 5
    assert all(check.holds for check in check_packing(combined, (matching, path)))


def test_hamilton_union() -> None:
    combined = hamilton_union_high_girth(60, 2, seed=9)

    assert combined.layer_count == 2
    assert combined.host.min_degree() == combined.host.max_degree() == 4
    assert combined.guaranteed_girth == 3
    assert all(check.holds for check in check_hamilton_layers(combined))


def test_single_hamilton_layer_is_the_cycle() -> None:
    combined = hamilton_union_high_girth(12, 1)

    assert combined.guaranteed_girth == 12
    assert is_hamilton_cycle(combined.host)
    assert not is_hamilton_cycle(complete_graph(4))


@pytest.mark.parametrize(("n", "d"), [(2, 1), (8, 2), (16, 3), (20, 0)])
def test_hamilton_union_rejects_small_n(n: int, d: int) -> None:
    with pytest.raises(InfeasibleParameters):
        hamilton_union_high_girth(n, d)


@pytest.mark.parametrize(("n", "d"), [(9, 2), (17, 3)])
def test_hamilton_union_at_smallest_order(n: int, d: int) -> None:
    combined = hamilton_union_high_girth(n, d, seed=4)

    assert 8 * (d - 1) == n - 1
    assert combined.layer_count == d
    assert combined.host.min_degree() == combined.host.max_degree() == 2 * d
    assert all(check.holds for check in check_hamilton_layers(combined))
