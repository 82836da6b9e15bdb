"""CLI command for nearly-fair representation by local search (fair)."""

from __future__ import annotations

from enum import StrEnum
from pathlib import Path
from typing import Any

import typer

from extremal.core.config import load_config
from extremal.core.errors import InfeasibleParameters
from extremal.core.rng import XorShift64Star
from extremal.fair import (
    CoverNeighborhood,
    HamiltonNeighborhood,
    MatchingNeighborhood,
    SampledNeighborhood,
    TFactorNeighborhood,
    load_partition,
    local_search,
    random_partition,
)
from extremal.graphs import Graph
from extremal.graphs.generators import complete_graph, path_graph
from extremal.reports import BoundCheck, check_fair, jsonable

from .utils import build_command_telemetry, read_inputs, run_reported, setup_logging

fair_app = typer.Typer()


class HostKind(StrEnum):
    KNN = "knn"
    KN = "kn"


class PatternKind(StrEnum):
    MATCHING = "matching"
    HAMILTON = "hamilton"
    K2 = "k2"
    K3 = "k3"
    P3 = "p3"


FACTOR_PATTERNS: dict[PatternKind, Graph] = {
    PatternKind.K2: complete_graph(2),
    PatternKind.K3: complete_graph(3),
    PatternKind.P3: path_graph(3),
}


def build_neighborhood(host: HostKind, n: int, pattern: PatternKind) -> CoverNeighborhood[Any]:
    """The uniform cover for ``pattern`` copies in ``host``; K_{n,n} only carries matchings."""
    if pattern is PatternKind.MATCHING:
        if host is not HostKind.KNN:
            raise InfeasibleParameters("perfect matchings are searched in the host knn")
        return MatchingNeighborhood(n)
    if host is not HostKind.KN:
        raise InfeasibleParameters(f"{pattern} copies are searched in the host kn")
    if pattern is PatternKind.HAMILTON:
        return HamiltonNeighborhood(n)
    return TFactorNeighborhood(n, FACTOR_PATTERNS[pattern])


@fair_app.command()
def fair(
    host: HostKind = typer.Option(HostKind.KNN, "--host", help="Host graph: knn or kn"),
    n: int = typer.Option(6, "--n", min=1, help="Side of K_{n,n} or order of K_n"),
    pattern: PatternKind = typer.Option(
        PatternKind.MATCHING, "--pattern", help="matching, hamilton, or a k2/k3/p3 factor"
    ),
    partition_path: Path | None = typer.Option(
        None,
        "--partition",
        exists=True,
        readable=True,
        help="Edge partition file; a seeded random partition is drawn when omitted",
    ),
    classes: int = typer.Option(3, "--m", min=1, help="Class count of a random partition"),
    sample: int | None = typer.Option(
        None, "--sample", min=1, help="Draw this many neighbours per step (non-certifying)"
    ),
    max_steps: int | None = typer.Option(None, "--max-steps", min=1, help="Stop after N moves"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Find a copy whose class counts sit close to the proportional share."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed
    telemetry = build_command_telemetry(config, "fair")

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        neighborhood = build_neighborhood(host, n, pattern)
        host_graph = neighborhood.host()
        if partition_path is None:
            partition = random_partition(host_graph, classes, XorShift64Star(run_seed))
        else:
            partition = load_partition(partition_path, host_graph)
        if sample is not None:
            neighborhood = SampledNeighborhood(neighborhood, sample, run_seed)
        result = local_search(partition, neighborhood, max_steps=max_steps)
        if not result.converged:
            telemetry.warning(
                "local_search_truncated",
                context={
                    "kind": neighborhood.kind,
                    "steps": result.steps,
                    "potential": result.potential,
                },
            )
        edges = sorted(neighborhood.edges(result.state))
        outputs = {
            "kind": neighborhood.kind,
            "edges": [list(edge) for edge in edges],
            "x": list(result.x),
            "y": jsonable(result.y),
            "distance_squared": jsonable(result.potential),
            "l2": result.l2,
            "linf": jsonable(result.linf),
            "bound": result.bound(),
            "steps": result.steps,
            "width": result.width,
            "certifying": result.certifying,
            "converged": result.converged,
        }
        checks = check_fair(
            partition, edges, result.width, neighborhood.kind, pattern=FACTOR_PATTERNS.get(pattern)
        )
        if not result.certifying or not result.converged:
            # a truncated or sampled search certifies only the copy itself
            checks = [check for check in checks if check.name != "distance_squared"]
        return outputs, checks

    run_reported(
        "fair",
        work,
        config=config,
        inputs=[*read_inputs(partition_path), f"{host} {n} {pattern} {classes} {sample}"],
        seed=run_seed,
        out=out,
        telemetry=telemetry,
    )
