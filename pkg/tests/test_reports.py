"""Tests for run reports, input digests and the independent bound re-checks."""

from __future__ import annotations

import json
from fractions import Fraction

from extremal.cds import CdsResult
from extremal.core.rng import XorShift64Star
from extremal.fair import random_partition
from extremal.graphs import INF, Graph
from extremal.graphs.generators import complete_graph, cycle_graph, path_graph, petersen_graph
from extremal.reports import (
    RunReport,
    at_least,
    at_most,
    check_cds,
    check_fair,
    digest_inputs,
    exactly,
    jsonable,
    recheck_girth,
)


def test_report_json_uses_schema_key() -> None:
    report = RunReport(
        command="pack",
        inputs_digest=digest_inputs("pack", "3 0\n"),
        seed=42,
        outputs={"girth": 5},
        bounds=[at_least("girth", 5, 3, True)],
    )
    payload = json.loads(report.to_json())

    assert payload["schema"] == 1
    assert "schema_version" not in payload
    assert payload["bounds"][0] == {
        "name": "girth",
        "relation": ">=",
        "claimed": 3,
        "achieved": 5,
        "holds": True,
    }
    assert report.ok
    assert RunReport.model_validate(payload) == report


def test_failed_checks_are_listed() -> None:
    report = RunReport(
        command="cds",
        inputs_digest="x",
        bounds=[at_most("size", 7, 5, False), exactly("count", 3, 3)],
    )

    assert not report.ok
    assert [check.name for check in report.failed()] == ["size"]


def test_digest_is_deterministic_and_length_prefixed() -> None:
    assert digest_inputs("a", "bc") == digest_inputs("a", b"bc")
    assert digest_inputs("a", "bc") != digest_inputs("ab", "c")
    assert len(digest_inputs()) == 64


def test_jsonable_converts_exact_values() -> None:
    converted = jsonable({"ratio": Fraction(1, 2), "whole": Fraction(4), "girth": INF, 3: (1, 2)})

    assert converted == {"ratio": "1/2", "whole": 4, "girth": "inf", "3": [1, 2]}
    assert at_most("bound", Fraction(7, 3), INF, True).claimed == "inf"


def test_recheck_girth_uses_networkx() -> None:
    assert recheck_girth(petersen_graph()) == 5
    assert recheck_girth(cycle_graph(4)) == 4


def test_check_cds_flags_a_set_that_does_not_dominate() -> None:
    g = cycle_graph(6)
    bogus = CdsResult(
        algorithm="greedy",
        k=2,
        dominating_set=(0, 1),
        connected_set=(0, 1),
        components_before=1,
        bound=10.0,
    )
    checks = {check.name: check for check in check_cds(g, bogus, certified_total=True)}

    assert not checks["dominating"].holds
    assert checks["connected"].holds
    assert checks["merge_budget"].holds
    assert checks["size_bound"].holds


def _copy_check(edges: list[tuple[int, int]], pattern: Graph | None = None) -> bool:
    partition = random_partition(complete_graph(6), 1, XorShift64Star(0))
    checks = check_fair(partition, edges, 9, "tfactor", pattern=pattern)
    return next(check.holds for check in checks if check.name == "copy_in_host")


def test_check_fair_certifies_only_real_factors() -> None:
    triangles = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    paths = [(0, 1), (1, 2), (3, 4), (4, 5)]

    assert _copy_check(triangles, pattern=complete_graph(3))
    assert _copy_check(paths, pattern=path_graph(3))
    assert not _copy_check([(0, 1)], pattern=complete_graph(3))
    assert not _copy_check(paths, pattern=complete_graph(3))
    assert not _copy_check(triangles[:3], pattern=complete_graph(3))
    assert not _copy_check(triangles)
