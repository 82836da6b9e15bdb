"""CLI commands for the probabilistic tools (ball, kpn, median)."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any

import typer

from extremal.core.config import load_config
from extremal.core.errors import InvalidInputError
from extremal.core.rng import XorShift64Star
from extremal.prob import (
    PoissonBinomial,
    hamming_center,
    hegedus_bound,
    kpn_bruteforce,
    load_ball_instance,
    median_check,
    medians,
    orthogonality_bound,
    pb_mean,
    random_ball_instance,
)
from extremal.reports import BoundCheck, check_hamming, check_kpn, exactly, jsonable

from .utils import read_inputs, run_reported, setup_logging

prob_app = typer.Typer()


def parse_probabilities(text: str) -> list[Fraction]:
    """Comma-separated probabilities; ``0.25`` and ``1/4`` are both accepted."""
    try:
        return [Fraction(token.strip()) for token in text.split(",") if token.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad probability list {text!r}: {exc}") from exc


@prob_app.command()
def ball(
    instance_path: Path | None = typer.Option(
        None, "--instance", exists=True, readable=True, help="JSON: center, radius, points"
    ),
    n: int = typer.Option(10, "--n", min=1, help="Dimension of a random instance"),
    radius: int = typer.Option(5, "--radius", min=0, help="Radius of a random instance"),
    size: int = typer.Option(20, "--size", min=1, help="Points in a random instance"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Round an l1-ball centre to a binary point covering half of the points."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if instance_path is None:
            inst = random_ball_instance(n, radius, size, XorShift64Star(run_seed))
        else:
            inst = load_ball_instance(instance_path)
        result = hamming_center(inst)
        steps = result.expectations
        rising = all(later >= earlier for earlier, later in zip(steps, steps[1:], strict=False))
        outputs = {
            "n": inst.n,
            "radius": inst.radius,
            "points": len(inst.points),
            "y": list(result.y),
            "count": result.count,
            "expectations": jsonable(steps),
        }
        checks = check_hamming(inst, result.y, result.count)
        checks.append(exactly("expectation_non_decreasing", int(rising), 1))
        return outputs, checks

    run_reported(
        "ball",
        work,
        config=config,
        inputs=[*read_inputs(instance_path), f"{n} {radius} {size}"],
        seed=run_seed,
        out=out,
    )


@prob_app.command()
def kpn(
    n: int = typer.Option(..., "--n", min=1, help="Vector length"),
    p: int = typer.Option(..., "--p", min=2, help="Prime order of the roots of unity"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Exact K(n, p) by branch and bound over all p^n root vectors."""
    config = load_config()
    setup_logging(config.log_dir, verbose)

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        result = kpn_bruteforce(n, p, max_vectors=config.oracle_max_kpn_vectors)
        outputs = {
            "n": n,
            "p": p,
            "value": result.value,
            "cover": [list(v.exponents) for v in result.cover],
            "search_nodes": result.nodes,
            "degree_bound": hegedus_bound(n, p),
            "orthogonality_bound": jsonable(orthogonality_bound(n, p)),
        }
        return outputs, check_kpn(result)

    run_reported("kpn", work, config=config, inputs=[f"{n} {p}"], out=out)


@prob_app.command()
def median(
    probabilities: str = typer.Option(
        "", "--probs", help="Comma-separated success probabilities, e.g. 1/3,0.5,0.9"
    ),
    count: int = typer.Option(0, "--random", min=0, help="Draw this many probabilities instead"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Check that a Poisson-binomial median sits at the floor or ceiling of the mean."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if count:
            rng = XorShift64Star(run_seed)
            values = [Fraction(rng.randbelow(101), 100) for _ in range(count)]
        else:
            values = parse_probabilities(probabilities)
        pb = PoissonBinomial.of(values)
        outputs = {
            "probabilities": jsonable(pb.probabilities),
            "mean": jsonable(pb_mean(pb)),
            "medians": medians(pb),
        }
        return outputs, [exactly("median_at_rounded_mean", int(median_check(pb)), 1)]

    run_reported(
        "median",
        work,
        config=config,
        inputs=[probabilities, str(count)],
        seed=run_seed,
        out=out,
    )
