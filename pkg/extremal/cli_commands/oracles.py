"""CLI commands for the exhaustive oracles (girth, gamma, fair, partitions, sweep)."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import pandas as pd
import typer
from loguru import logger

from extremal.cds import derandomized_cds, f_nk
from extremal.coalition import load_instance
from extremal.core.config import load_config
from extremal.core.errors import InfeasibleParameters
from extremal.core.rng import XorShift64Star
from extremal.fair import load_partition, local_search, random_partition
from extremal.graphs import Graph, girth, is_connected, load_graph
from extremal.graphs.generators import random_connected_graph
from extremal.oracle import (
    CopyKind,
    OracleBudget,
    all_valid_partitions,
    exact_fair_optimum,
    exact_girth,
    minimum_dominating_set,
)
from extremal.reports import BoundCheck, at_least, at_most, exactly, jsonable

from .fairness import HostKind, PatternKind, build_neighborhood
from .utils import read_inputs, run_reported, setup_logging

oracle_app = typer.Typer()


def domination_row(g: Graph, budget: OracleBudget) -> dict[str, Any]:
    """Exact γ and γ_c next to the additive bound and the derandomized result."""
    k = g.min_degree()
    gamma_set = minimum_dominating_set(g, budget=budget)
    connected_set = minimum_dominating_set(g, connected=True, budget=budget)
    gamma, gamma_c = len(gamma_set), len(connected_set)
    additive = gamma + f_nk(g.n, k, gamma)
    algorithm = derandomized_cds(g).size
    return {
        "n": g.n,
        "edges": g.edge_count,
        "k": k,
        "gamma": gamma,
        "gamma_c": gamma_c,
        "additive_bound": float(additive),
        "derandomized": algorithm,
        "bound_holds": gamma <= gamma_c <= additive,
        "algorithm_above_optimum": algorithm >= gamma_c,
        "gamma_set": list(gamma_set),
        "gamma_c_set": list(connected_set),
    }


@oracle_app.command("girth")
def girth_oracle(
    graph_path: Path = typer.Option(..., "--graph", exists=True, readable=True),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Girth by simple-cycle enumeration, compared with the BFS girth."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    budget = OracleBudget.from_config(config)

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        g = load_graph(graph_path)
        exact, fast = exact_girth(g, budget), girth(g)
        outputs = {"n": g.n, "girth": jsonable(exact), "bfs_girth": jsonable(fast)}
        return outputs, [
            BoundCheck(
                name="bfs_matches_enumeration",
                relation="==",
                claimed=jsonable(exact),
                achieved=jsonable(fast),
                holds=exact == fast,
            )
        ]

    run_reported("oracle girth", work, config=config, inputs=read_inputs(graph_path), out=out)


@oracle_app.command("gamma")
def gamma_oracle(
    graph_path: Path = typer.Option(..., "--graph", exists=True, readable=True),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Exact γ and γ_c with the additive bound between them."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    budget = OracleBudget.from_config(config)

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        g = load_graph(graph_path)
        if not is_connected(g) or g.min_degree() < 1:
            raise InfeasibleParameters("the domination oracle needs a connected graph, k >= 1")
        row = domination_row(g, budget)
        return row, [
            at_most("gamma_below_gamma_c", row["gamma"], row["gamma_c"], row["bound_holds"]),
            at_most(
                "gamma_c_additive", row["gamma_c"], row["additive_bound"], row["bound_holds"]
            ),
            at_least(
                "derandomized_above_optimum",
                row["derandomized"],
                row["gamma_c"],
                row["algorithm_above_optimum"],
            ),
        ]

    run_reported("oracle gamma", work, config=config, inputs=read_inputs(graph_path), out=out)


@oracle_app.command("fair")
def fair_oracle(
    host: HostKind = typer.Option(HostKind.KNN, "--host", help="knn or kn"),
    n: int = typer.Option(4, "--n", min=1, help="Side of K_{n,n} or order of K_n"),
    pattern: PatternKind = typer.Option(PatternKind.MATCHING, "--pattern"),
    partition_path: Path | None = typer.Option(
        None, "--partition", exists=True, readable=True, help="Edge partition file"
    ),
    classes: int = typer.Option(3, "--m", min=1, help="Class count of a random partition"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Optimum over every matching or Hamilton cycle versus the local search result."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    budget = OracleBudget.from_config(config)
    run_seed = config.default_seed if seed is None else seed

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if pattern not in (PatternKind.MATCHING, PatternKind.HAMILTON):
            raise InfeasibleParameters("the fairness oracle covers matchings and Hamilton cycles")
        neighborhood = build_neighborhood(host, n, pattern)
        host_graph = neighborhood.host()
        if partition_path is None:
            partition = random_partition(host_graph, classes, XorShift64Star(run_seed))
        else:
            partition = load_partition(partition_path, host_graph)
        optimum = exact_fair_optimum(partition, CopyKind(str(pattern)), budget)
        found = local_search(partition, neighborhood)
        outputs = {
            "optimum_distance_squared": jsonable(optimum.distance_squared),
            "optimum_witness": [list(edge) for edge in optimum.witness],
            "copies": optimum.copies,
            "local_search_distance_squared": jsonable(found.potential),
            "bound": found.bound(),
        }
        return outputs, [
            at_least(
                "local_search_above_optimum",
                found.potential,
                optimum.distance_squared,
                found.potential >= optimum.distance_squared,
            ),
            at_most("local_search_within_bound", found.l2, found.bound(), found.within_bound()),
        ]

    run_reported(
        "oracle fair",
        work,
        config=config,
        inputs=[*read_inputs(partition_path), f"{host} {n} {pattern} {classes}"],
        seed=run_seed,
        out=out,
    )


@oracle_app.command("partitions")
def partitions_oracle(
    instance_path: Path = typer.Option(..., "--instance", exists=True, readable=True),
    limit: int = typer.Option(50, "--limit", min=0, help="Partitions to list in the report"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Every valid partition of a fully specified instance."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    budget = OracleBudget.from_config(config)

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        inst = load_instance(instance_path)
        found = list(all_valid_partitions(inst, budget))
        splitting = [pr for pr in found if pr.splits(inst.coalition)]
        outputs = {
            "valid_partitions": len(found),
            "splitting_partitions": len(splitting),
            "coalition_survives": not splitting,
            "partitions": [pr.as_lists() for pr in found[:limit]],
        }
        return outputs, [at_least("valid_partitions", len(found), 1, bool(found))]

    run_reported(
        "oracle partitions", work, config=config, inputs=read_inputs(instance_path), out=out
    )


@oracle_app.command("sweep")
def sweep(
    count: int = typer.Option(50, "--count", min=1, help="Random graphs in the suite"),
    n_min: int = typer.Option(6, "--n-min", min=3, help="Smallest vertex count"),
    n_max: int = typer.Option(12, "--n-max", min=3, help="Largest vertex count"),
    max_degree: int = typer.Option(3, "--k-max", min=1, help="Largest minimum degree drawn"),
    csv_path: Path = typer.Option(Path("sweep.csv"), "--csv", help="Write the per-graph rows here"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Check γ <= γ_c <= γ + f(γ) and the derandomized size on a seeded random suite."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    budget = OracleBudget.from_config(config)
    run_seed = config.default_seed if seed is None else seed

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if n_min > n_max:
            raise InfeasibleParameters(f"--n-min {n_min} exceeds --n-max {n_max}")
        rng = XorShift64Star(run_seed)
        rows: list[dict[str, Any]] = []
        for index in range(count):
            stream = rng.spawn(index + 1)
            n = n_min + stream.randbelow(n_max - n_min + 1)
            k = 1 + stream.randbelow(min(max_degree, n - 1))
            g = random_connected_graph(n, k, stream)
            row = domination_row(g, budget)
            row["instance"] = index
            rows.append(row)
        frame = pd.DataFrame(rows)
        columns = ["instance", "n", "edges", "k", "gamma", "gamma_c", "additive_bound"]
        columns += ["derandomized", "bound_holds", "algorithm_above_optimum"]
        csv_path.parent.mkdir(parents=True, exist_ok=True)
        frame[columns].to_csv(csv_path, index=False)
        logger.info("Sweep of {} graphs written to {}", len(frame), csv_path)
        gap = frame["gamma_c"] - frame["gamma"]
        holds = int(frame["bound_holds"].sum())
        above = int(frame["algorithm_above_optimum"].sum())
        outputs = {
            "instances": len(frame),
            "csv": str(csv_path),
            "max_gamma_gap": int(gap.max()),
            "mean_gamma_gap": float(gap.mean()),
            "tight_instances": int((frame["gamma_c"] == frame["additive_bound"]).sum()),
        }
        return outputs, [
            exactly("additive_bound_holds", holds, len(frame)),
            exactly("derandomized_above_optimum", above, len(frame)),
        ]

    run_reported(
        "oracle sweep",
        work,
        config=config,
        inputs=[f"{count} {n_min} {n_max} {max_degree}"],
        seed=run_seed,
        out=out,
    )
