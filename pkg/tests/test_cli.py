"""CLI tests: reports, exit codes and telemetry of the extremal commands."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from extremal import cli
from extremal.cli_commands import (
    coalitions,
    domination,
    fairness,
    oracles,
    packing,
    probability,
)
from extremal.core.config import ExtremalConfig
from extremal.core.rng import XorShift64Star
from extremal.fair import MatchingNeighborhood, local_search, random_partition
from extremal.graphs import load_graph
from extremal.graphs.generators import cycle_graph

runner = CliRunner()

COMMAND_MODULES = (packing, domination, fairness, coalitions, probability, oracles)


@pytest.fixture
def config(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> ExtremalConfig:
    cfg = ExtremalConfig(log_dir=tmp_path / "logs", data_dir=tmp_path / "data")
    for module in COMMAND_MODULES:
        monkeypatch.setattr(module, "load_config", lambda: cfg)
        monkeypatch.setattr(module, "setup_logging", lambda *_args, **_kwargs: None)
    return cfg


def _invoke(*args: str) -> Any:
    return runner.invoke(cli.app, list(args))


def _report(path: Path) -> dict[str, Any]:
    return json.loads(path.read_text(encoding="utf-8"))


def _gen(tmp_path: Path, family: str, name: str, *options: str) -> Path:
    path = tmp_path / name
    result = _invoke("gen-graph", family, *options, "--out", str(path))
    assert result.exit_code == 0, result.output
    return path


def test_gen_graph_writes_edge_list(config: ExtremalConfig, tmp_path: Path) -> None:
    path = _gen(tmp_path, "cycle", "c100.txt", "--n", "100")

    assert load_graph(path) == cycle_graph(100)


def test_gen_graph_rejects_infeasible_family(config: ExtremalConfig, tmp_path: Path) -> None:
    result = _invoke("gen-graph", "cycle", "--n", "2", "--out", str(tmp_path / "c2.txt"))

    assert result.exit_code == 3


def test_pack_reports_certified_girth(config: ExtremalConfig, tmp_path: Path) -> None:
    graph = _gen(tmp_path, "cycle", "c100.txt", "--n", "100")
    out = tmp_path / "pack.json"

    result = _invoke(
        "pack", "--g1", str(graph), "--g2", str(graph), "--seed", "42", "--out", str(out)
    )

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["schema"] == 1
    assert report["command"] == "pack"
    assert report["seed"] == 42
    assert report["outputs"]["k_bound"] == 3
    assert len(report["outputs"]["edges"]) == 200
    assert all(check["holds"] for check in report["bounds"])


def test_pack_hamilton_union(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "union.json"

    result = _invoke("pack", "--hamilton-union", "n=60", "d=2", "--out", str(out))

    assert result.exit_code == 0, result.output
    outputs = _report(out)["outputs"]
    assert outputs["layers"] == 2
    assert len(outputs["swaps"]) == 1
    assert len(outputs["edges"]) == 120


def test_pack_mismatched_orders_exit_with_precondition_code(
    config: ExtremalConfig, tmp_path: Path
) -> None:
    first = _gen(tmp_path, "cycle", "c10.txt", "--n", "10")
    second = _gen(tmp_path, "path", "p11.txt", "--n", "11")

    result = _invoke("pack", "--g1", str(first), "--g2", str(second))

    assert result.exit_code == 3


def test_pack_malformed_file_exits_with_input_code(config: ExtremalConfig, tmp_path: Path) -> None:
    broken = tmp_path / "broken.txt"
    broken.write_text("3 x\n", encoding="utf-8")

    result = _invoke("pack", "--g1", str(broken), "--g2", str(broken))

    assert result.exit_code == 2


def test_pack_hamilton_union_needs_both_parameters(config: ExtremalConfig) -> None:
    result = _invoke("pack", "--hamilton-union", "n=60")

    assert result.exit_code == 2


def test_cds_on_cycle_of_cliques(config: ExtremalConfig, tmp_path: Path) -> None:
    graph = _gen(tmp_path, "cliques", "cliques.txt", "--n", "4", "--k", "3")
    out = tmp_path / "cds.json"

    result = _invoke("cds", "--graph", str(graph), "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["outputs"]["algorithm"] == "derandomized-float"
    assert report["outputs"]["size"] >= 10
    assert report["outputs"]["psi_steps"] == 17
    assert {check["name"] for check in report["bounds"]} >= {"dominating", "size_bound"}
    assert all(check["holds"] for check in report["bounds"])


def test_cds_greedy_skips_total_bound(config: ExtremalConfig, tmp_path: Path) -> None:
    graph = _gen(tmp_path, "random", "random.txt", "--n", "25", "--k", "3", "--seed", "4")
    out = tmp_path / "greedy.json"

    result = _invoke("cds", "--graph", str(graph), "--algorithm", "greedy", "--out", str(out))

    assert result.exit_code == 0, result.output
    names = {check["name"] for check in _report(out)["bounds"]}
    assert "size_bound" not in names


def test_cds_disconnected_host_is_a_precondition_failure(
    config: ExtremalConfig, tmp_path: Path
) -> None:
    graph = tmp_path / "two.txt"
    graph.write_text("4 2\n0 1\n2 3\n", encoding="utf-8")

    result = _invoke("cds", "--graph", str(graph))

    assert result.exit_code == 3


def test_coalition_construct_survives(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "construct.json"

    result = _invoke(
        "coalition", "--construct", "--k", "2", "--r", "3", "--n", "6", "--out", str(out)
    )

    assert result.exit_code == 0, result.output
    outputs = _report(out)["outputs"]
    assert outputs["partitions_checked"] == 203
    assert outputs["instance"]["choices"]["0"] == [1, 2]


def test_coalition_break_from_instance_file(config: ExtremalConfig, tmp_path: Path) -> None:
    instance = tmp_path / "cyclic.txt"
    instance.write_text(
        "8 3 5\n0: 1 2 3\n1: 2 3 4\n2: 3 4 0\n3: 4 0 1\n4: 0 1 2\n", encoding="utf-8"
    )
    out = tmp_path / "break.json"

    result = _invoke("coalition", "--break", "--instance", str(instance), "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert len(report["outputs"]["parts"]) == 2
    assert all(check["holds"] for check in report["bounds"])


def test_coalition_needs_exactly_one_action(config: ExtremalConfig) -> None:
    result = _invoke("coalition", "--claim", "--construct")

    assert result.exit_code == 2


def test_kpn_small_case(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "kpn.json"

    result = _invoke("kpn", "--n", "2", "--p", "2", "--out", str(out))

    assert result.exit_code == 0, result.output
    outputs = _report(out)["outputs"]
    assert outputs["value"] == 2
    assert outputs["orthogonality_bound"] == 2


def test_kpn_over_budget(config: ExtremalConfig) -> None:
    result = _invoke("kpn", "--n", "6", "--p", "3")

    assert result.exit_code == 3


def test_ball_random_instance(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "ball.json"

    result = _invoke(
        "ball", "--n", "8", "--radius", "2", "--size", "10", "--seed", "3", "--out", str(out)
    )

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert len(report["outputs"]["y"]) == 8
    assert all(check["holds"] for check in report["bounds"])


def test_median_command(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "median.json"

    result = _invoke("median", "--probs", "1/2,1/3", "--out", str(out))

    assert result.exit_code == 0, result.output
    outputs = _report(out)["outputs"]
    assert outputs["medians"] == [1]
    assert outputs["mean"] == "5/6"
    assert _invoke("median", "--probs", "half").exit_code == 2


def test_fair_matching_search(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "fair.json"

    result = _invoke("fair", "--n", "5", "--m", "2", "--seed", "1", "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["outputs"]["certifying"] is True
    assert len(report["outputs"]["edges"]) == 5
    assert all(check["holds"] for check in report["bounds"])


def test_fair_triangle_factor_in_complete_host(config: ExtremalConfig, tmp_path: Path) -> None:
    out = tmp_path / "k3.json"

    args = ["fair", "--host", "kn", "--n", "6", "--pattern", "k3", "--m", "2", "--seed", "1"]
    result = _invoke(*args, "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["outputs"]["kind"] == "tfactor"
    assert len(report["outputs"]["edges"]) == 6
    assert all(check["holds"] for check in report["bounds"])


def _seed_needing_two_moves() -> int:
    neighborhood = MatchingNeighborhood(6)
    for seed in range(100):
        partition = random_partition(neighborhood.host(), 3, XorShift64Star(seed))
        if local_search(partition, neighborhood).steps >= 2:
            return seed
    pytest.fail("no seed needs two improving moves")


def test_fair_truncated_search_is_reported(config: ExtremalConfig, tmp_path: Path) -> None:
    seed = _seed_needing_two_moves()
    out = tmp_path / "truncated.json"

    args = ["fair", "--n", "6", "--m", "3", "--seed", str(seed), "--max-steps", "1"]
    result = _invoke(*args, "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["outputs"]["converged"] is False
    assert "distance_squared" not in {check["name"] for check in report["bounds"]}
    lines = (config.log_dir / "telemetry.jsonl").read_text(encoding="utf-8").splitlines()
    records = [json.loads(line) for line in lines]
    warning = next(record for record in records if record["message"] == "local_search_truncated")
    assert warning["level"] == "WARNING"
    assert warning["context"]["command"] == "fair"
    assert warning["context"]["seed"] == seed
    assert warning["context"]["steps"] == 1
    assert records[-1]["message"] == "run_completed"


def test_fair_rejects_matching_in_complete_host(config: ExtremalConfig) -> None:
    result = _invoke("fair", "--host", "kn", "--pattern", "matching")

    assert result.exit_code == 3


def test_oracle_gamma_on_cycle(config: ExtremalConfig, tmp_path: Path) -> None:
    graph = _gen(tmp_path, "cycle", "c6.txt", "--n", "6")
    out = tmp_path / "gamma.json"

    result = _invoke("oracle", "gamma", "--graph", str(graph), "--out", str(out))

    assert result.exit_code == 0, result.output
    report = _report(out)
    assert report["command"] == "oracle gamma"
    assert (report["outputs"]["gamma"], report["outputs"]["gamma_c"]) == (2, 4)
    assert all(check["holds"] for check in report["bounds"])


def test_oracle_girth_on_petersen(config: ExtremalConfig, tmp_path: Path) -> None:
    graph = _gen(tmp_path, "petersen", "petersen.txt")
    out = tmp_path / "girth.json"

    result = _invoke("oracle", "girth", "--graph", str(graph), "--out", str(out))

    assert result.exit_code == 0, result.output
    assert _report(out)["outputs"]["girth"] == 5


def test_telemetry_records_runs(config: ExtremalConfig, tmp_path: Path) -> None:
    _invoke("kpn", "--n", "2", "--p", "2", "--out", str(tmp_path / "ok.json"))
    _invoke("kpn", "--n", "6", "--p", "3")

    lines = (config.log_dir / "telemetry.jsonl").read_text(encoding="utf-8").splitlines()
    records = [json.loads(line) for line in lines]
    assert [record["message"] for record in records] == ["run_completed", "run_failed"]
    assert records[0]["context"]["command"] == "kpn"
    assert records[0]["context"]["ok"] is True
    assert records[1]["context"]["error"] == "TooLarge"
    assert records[1]["context"]["exit_code"] == 3
