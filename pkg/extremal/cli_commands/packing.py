"""CLI commands for girth-preserving packing (pack, gen-graph)."""

from __future__ import annotations

from enum import StrEnum
from pathlib import Path
from typing import Any

import typer
from loguru import logger

from extremal.cds import gen_cycle_of_cliques
from extremal.core.config import load_config
from extremal.core.errors import ExtremalError, InvalidInputError
from extremal.core.rng import XorShift64Star
from extremal.graphs import Graph, format_graph, girth, load_graph
from extremal.graphs.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_connected_graph,
)
from extremal.packing import (
    CombinedGraph,
    PackingTrace,
    hamilton_union_high_girth,
    pack_high_girth,
)
from extremal.reports import (
    BoundCheck,
    check_hamilton_layers,
    check_packing,
    exactly,
    jsonable,
)

from .utils import read_inputs, run_reported, setup_logging

packing_app = typer.Typer()


class GraphFamily(StrEnum):
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    BIPARTITE = "bipartite"
    PETERSEN = "petersen"
    RANDOM = "random"
    CLIQUES = "cliques"


def parse_hamilton_union(tokens: list[str]) -> tuple[int, int]:
    """``["n=1000", "d=2"]`` to ``(1000, 2)``."""
    values: dict[str, int] = {}
    for token in tokens:
        key, sep, raw = token.partition("=")
        if not sep or key not in ("n", "d"):
            raise InvalidInputError(f"expected n=<int> or d=<int>, got {token!r}")
        try:
            values[key] = int(raw)
        except ValueError as exc:
            raise InvalidInputError(f"{key} must be an integer, got {raw!r}") from exc
    if set(values) != {"n", "d"}:
        raise InvalidInputError("--hamilton-union needs both n=<int> and d=<int>")
    return values["n"], values["d"]


def _combined_outputs(combined: CombinedGraph) -> dict[str, Any]:
    return {
        "n": combined.host.n,
        "layers": combined.layer_count,
        "k_bound": combined.k_bound,
        "guaranteed_girth": jsonable(combined.guaranteed_girth),
        "achieved_girth": jsonable(girth(combined.host)),
        "edges": [[u, v, combined.provenance[(u, v)]] for u, v in combined.host.edges()],
        "layer_maps": [list(mapping) for mapping in combined.layer_maps],
    }


@packing_app.command()
def pack(
    g1: Path | None = typer.Option(
        None, "--g1", exists=True, readable=True, help="First guest graph (edge list)"
    ),
    g2: Path | None = typer.Option(
        None, "--g2", exists=True, readable=True, help="Second guest graph (edge list)"
    ),
    hamilton_union: bool = typer.Option(
        False, "--hamilton-union", help="Pack d Hamilton cycles instead of two files"
    ),
    union_params: list[str] | None = typer.Argument(
        None, help="n=<int> d=<int> for --hamilton-union"
    ),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Pack two graphs edge-disjointly so the union keeps high girth."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if hamilton_union:
            n, d = parse_hamilton_union(union_params or [])
            traces: list[PackingTrace] = []
            combined = hamilton_union_high_girth(
                n, d, seed=run_seed, max_restarts=config.packing_max_restarts, traces=traces
            )
            outputs = _combined_outputs(combined)
            outputs["swaps"] = [trace.iterations for trace in traces]
            return outputs, check_hamilton_layers(combined)
        if g1 is None or g2 is None:
            raise InvalidInputError("pass --g1 and --g2, or --hamilton-union n=<int> d=<int>")
        first, second = load_graph(g1), load_graph(g2)
        trace = PackingTrace(target=0)
        combined = pack_high_girth(
            first,
            second,
            seed=run_seed,
            max_restarts=config.packing_max_restarts,
            trace=trace,
        )
        outputs = _combined_outputs(combined)
        outputs["swaps"] = trace.iterations
        checks = check_packing(combined, (first, second))
        progress = trace.is_strictly_decreasing()
        checks.append(exactly("progress_strictly_decreasing", int(progress), 1))
        return outputs, checks

    run_reported(
        "pack",
        work,
        config=config,
        inputs=[*read_inputs(g1, g2), " ".join(union_params or [])],
        seed=run_seed,
        out=out,
    )


def build_family_graph(family: GraphFamily, n: int, *, k: int, seed: int) -> Graph:
    """One member of a named family; ``k`` is the degree parameter where one applies."""
    match family:
        case GraphFamily.CYCLE:
            return cycle_graph(n)
        case GraphFamily.PATH:
            return path_graph(n)
        case GraphFamily.COMPLETE:
            return complete_graph(n)
        case GraphFamily.BIPARTITE:
            return complete_bipartite(n)
        case GraphFamily.PETERSEN:
            return petersen_graph()
        case GraphFamily.RANDOM:
            return random_connected_graph(n, k, XorShift64Star(seed))
        case GraphFamily.CLIQUES:
            return gen_cycle_of_cliques(k, n)


@packing_app.command("gen-graph")
def gen_graph(
    family: GraphFamily = typer.Argument(..., help="Graph family to generate"),
    n: int = typer.Option(10, "--n", help="Vertex count (clique count for 'cliques')"),
    k: int = typer.Option(
        3, "--k", help="Minimum degree for 'random', clique degree for 'cliques'"
    ),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed for 'random'"),
    out: Path | None = typer.Option(None, "--out", help="Write the edge list here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Write a graph from a named family in the edge-list format."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed
    try:
        graph = build_family_graph(family, n, k=k, seed=run_seed)
    except ExtremalError as exc:
        logger.error("gen-graph failed: {}", exc)
        raise typer.Exit(code=exc.exit_code) from exc
    text = format_graph(graph)
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(
        "Wrote {} graph with n={} and {} edges to {}", family, graph.n, graph.edge_count, out
    )
