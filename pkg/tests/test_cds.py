"""Tests for the connected dominating set constructions and their budget."""

from __future__ import annotations

import math
from itertools import pairwise
from decimal import Decimal
from fractions import Fraction

import pytest

from extremal.cds import (
    Decision,
    DomState,
    Potential,
    PsiArithmetic,
    PsiTracker,
    binom_inv_expectation,
    binom_inv_expectation_sum,
    component_bound,
    derandomized_cds,
    domination_bounds,
    f_nk,
    gen_cycle_of_cliques,
    greedy_cds,
    greedy_dominating_set,
    merge_components,
    psi,
    randomized_cds,
    selection_probability,
)
from extremal.core.errors import DomainError, HostDisconnected, InfeasibleParameters, NotDominating
from extremal.core.rng import XorShift64Star
from extremal.graphs import Graph, connected_components, is_connected_subset, is_dominating
from extremal.graphs.generators import (
    cycle_graph,
    disjoint_union,
    path_graph,
    petersen_graph,
    random_connected_graph,
)
from extremal.reports import check_cds


@pytest.mark.parametrize(("n", "k"), [(16, 3), (100, 9), (4, 3), (7, 1)])
def test_f_nk_vanishes_for_one_component(n: int, k: int) -> None:
    assert f_nk(n, k, 1) == 0


def test_f_nk_known_values() -> None:
    # L = 4: x = 4 gives y = 1, z = 0 and f = 4 * 2 - 2
    assert f_nk(16, 3, 4) == 6
    # y = 0 branch is 2Lz - 2
    assert f_nk(16, 3, 2) == 2
    assert f_nk(16, 3, Fraction(6)) == Fraction(4) * (Fraction(1, 2) + 2) - 2


def test_f_nk_is_increasing_and_continuous() -> None:
    n, k = 60, 5
    values = [f_nk(n, k, Fraction(x, 4)) for x in range(4, 4 * 40)]

    assert all(later > earlier for earlier, later in pairwise(values))
    scale = Fraction(n, k + 1)
    for y in range(1, 4):
        left = f_nk(n, k, y * scale - Fraction(1, 10**9))
        assert abs(f_nk(n, k, y * scale) - left) < Fraction(1, 10**6)


def test_f_nk_decimal_matches_fraction() -> None:
    exact = f_nk(100, 9, Fraction(37, 2))
    approximate = f_nk(100, 9, Decimal("18.5"))

    assert abs(Decimal(exact.numerator) / exact.denominator - approximate) < Decimal("1e-20")


def test_f_nk_domain() -> None:
    with pytest.raises(DomainError):
        f_nk(10, 2, 0)
    with pytest.raises(DomainError):
        f_nk(0, 2, 1)


@pytest.mark.parametrize(("k", "p"), [(0, 0.5), (3, 0.25), (10, 0.2), (60, 0.07)])
def test_binomial_inverse_closed_form(k: int, p: float) -> None:
    assert binom_inv_expectation(k, p) == pytest.approx(
        binom_inv_expectation_sum(k, p), rel=1e-12
    )


def test_binomial_inverse_domain() -> None:
    with pytest.raises(DomainError):
        binom_inv_expectation(3, 1.0)


def test_domination_bounds() -> None:
    bounds = domination_bounds(100, 9)
    log_k = math.log(10)

    assert bounds.gamma == pytest.approx(10 * (log_k + 1))
    assert bounds.connected == pytest.approx(10 * (log_k + 4) - 2)
    assert bounds.connected_floor() == math.floor(bounds.connected)
    with pytest.raises(DomainError):
        domination_bounds(10, 0)


def test_cycle_of_cliques_is_regular_and_connected() -> None:
    g = gen_cycle_of_cliques(3, 4)

    assert g.n == 16
    assert g.min_degree() == g.max_degree() == 3
    assert is_connected_subset(g, range(g.n))
    with pytest.raises(InfeasibleParameters):
        gen_cycle_of_cliques(1, 4)


def test_component_bound_dominates_component_count() -> None:
    g = cycle_graph(10)
    chosen = {0, 1, 4, 7}

    assert component_bound(g, chosen) == Fraction(1, 2) * 2 + 1 + 1
    assert component_bound(g, chosen) >= len(connected_components(g, chosen))


def test_merge_components_joins_a_dominating_set() -> None:
    g = cycle_graph(9)
    merged = merge_components(g, {0, 3, 6})

    assert is_dominating(g, merged)
    assert is_connected_subset(g, merged)
    assert len(merged) <= 3 + f_nk(9, 2, 3)


def test_merge_components_preconditions() -> None:
    with pytest.raises(NotDominating):
        merge_components(cycle_graph(9), {0})
    with pytest.raises(NotDominating):
        merge_components(cycle_graph(9), set())
    with pytest.raises(HostDisconnected):
        merge_components(disjoint_union(cycle_graph(3), cycle_graph(3)), range(6))


def test_greedy_dominating_set() -> None:
    g = petersen_graph()

    assert is_dominating(g, greedy_dominating_set(g))


def test_dom_state_decides_in_order() -> None:
    state = DomState.initial(3)
    state.decide(0, Decision.IN_T)

    assert state.is_valid()
    assert state.members() == [0]
    with pytest.raises(DomainError):
        state.decide(2, Decision.NOT_IN_T)


def test_tracker_matches_full_potential() -> None:
    g = petersen_graph()
    p = selection_probability(3, PsiArithmetic.RATIONAL, p_bits=20)
    tracker = PsiTracker(g, p)
    state = DomState.initial(g.n)
    for v, decision in enumerate([Decision.IN_T, Decision.NOT_IN_T, Decision.IN_T]):
        assert tracker.evaluate(v, decision) == _committed(g, state, v, decision, p)
        tracker.commit(v, decision)
        state.decide(v, decision)
    assert tracker.potential() == psi(g, state, p)


def _committed(g: Graph, state: DomState, v: int, decision: Decision, p: Fraction) -> Potential:
    trial = DomState(list(state.decisions), state.index)
    trial.decide(v, decision)
    return psi(g, trial, p)


def test_derandomized_on_cycle_of_cliques() -> None:
    g = gen_cycle_of_cliques(3, 4)
    result = derandomized_cds(g)

    assert result.size <= result.bound
    assert is_dominating(g, result.connected_set)
    assert is_connected_subset(g, result.connected_set)
    assert result.size >= 10
    assert all(check.holds for check in check_cds(g, result, certified_total=True))


def test_derandomized_potential_never_increases() -> None:
    g = random_connected_graph(40, 4, XorShift64Star(21))
    result = derandomized_cds(g)
    history = result.psi_history

    assert len(history) == g.n + 1
    assert all(later <= earlier + Decimal("1e-9") for earlier, later in pairwise(history))
    assert result.size <= float(history[-1]) + 1e-9


def test_derandomized_rational_mode_is_exact() -> None:
    g = random_connected_graph(14, 3, XorShift64Star(2))
    result = derandomized_cds(g, arithmetic=PsiArithmetic.RATIONAL, p_bits=24)
    history = result.psi_history

    assert all(isinstance(value, Fraction) for value in history)
    assert all(later <= earlier for earlier, later in pairwise(history))
    assert result.algorithm == "derandomized-rational"
    assert result.size <= result.bound


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_randomized_and_greedy_are_valid(seed: int) -> None:
    g = random_connected_graph(30, 3, XorShift64Star(seed))

    for result in (randomized_cds(g, seed), greedy_cds(g)):
        assert is_dominating(g, result.connected_set)
        assert is_connected_subset(g, result.connected_set)
        checks = check_cds(g, result, certified_total=False)
        assert all(check.holds for check in checks)


def test_constructions_require_connected_host() -> None:
    with pytest.raises(HostDisconnected):
        derandomized_cds(disjoint_union(cycle_graph(4), cycle_graph(4)))
    with pytest.raises(HostDisconnected):
        greedy_cds(disjoint_union(path_graph(2), path_graph(2)))
