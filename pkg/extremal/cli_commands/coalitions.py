"""CLI command for the coalition game (coalition)."""

from __future__ import annotations

from pathlib import Path
from typing import Any

import typer

from extremal.coalition import (
    CoalitionInstance,
    PartitionResult,
    VerificationMode,
    break_coalition,
    coalition_construct,
    format_instance,
    load_instance,
    monte_carlo_claim,
    verify_coalition_success,
)
from extremal.core.config import load_config
from extremal.core.errors import InternalInvariantViolation, InvalidInputError
from extremal.reports import BoundCheck, at_least, check_coalition_partition, exactly, jsonable

from .utils import read_inputs, run_reported, setup_logging

coalition_app = typer.Typer()


def _instance_outputs(inst: CoalitionInstance) -> dict[str, Any]:
    return {
        "n": inst.n,
        "k": inst.k,
        "r": inst.r,
        "choices": {str(child): list(inst.choices[child]) for child in sorted(inst.choices)},
    }


def _partition_outputs(pr: PartitionResult) -> dict[str, Any]:
    outputs: dict[str, Any] = {"parts": pr.as_lists()}
    if pr.completed is not None:
        outputs["completed"] = _instance_outputs(pr.completed)
    return outputs


def _partition_checks(pr: PartitionResult, coalition: frozenset[int]) -> list[BoundCheck]:
    if pr.completed is None:
        raise InternalInvariantViolation("partition carries no completed instance to check")
    return check_coalition_partition(pr.completed, pr, coalition)


@coalition_app.command()
def coalition(
    instance_path: Path | None = typer.Option(
        None, "--instance", exists=True, readable=True, help="Instance file: 'n k r' + lists"
    ),
    break_: bool = typer.Option(False, "--break", help="Split R by a valid partition"),
    verify: bool = typer.Option(False, "--verify", help="Decide success exhaustively"),
    claim: bool = typer.Option(False, "--claim", help="Monte-Carlo estimate of the good event"),
    construct: bool = typer.Option(False, "--construct", help="Build a successful k<=2 coalition"),
    mode: VerificationMode = typer.Option(
        VerificationMode.ADVERSARIAL, "--mode", help="adversarial or fixed-completion"
    ),
    n: int = typer.Option(8, "--n", min=2, help="Children for --claim and --construct"),
    k: int = typer.Option(2, "--k", min=1, help="List size for --construct"),
    r: int = typer.Option(3, "--r", min=1, help="Coalition size for --construct"),
    trials: int = typer.Option(10_000, "--trials", help="Trials for --claim"),
    seed: int | None = typer.Option(None, "--seed", min=0, help="PRNG seed (default from config)"),
    out: Path | None = typer.Option(None, "--out", help="Write the JSON report here"),
    verbose: bool = typer.Option(False, "--verbose", help="Enable verbose logging"),
) -> None:
    """Break, verify, construct or sample coalitions of children choosing friends."""
    config = load_config()
    setup_logging(config.log_dir, verbose)
    run_seed = config.default_seed if seed is None else seed
    selected = {"break": break_, "verify": verify, "claim": claim, "construct": construct}
    actions = [name for name, on in selected.items() if on]

    def load() -> CoalitionInstance:
        if instance_path is None:
            raise InvalidInputError(f"--{actions[0]} needs --instance")
        return load_instance(instance_path)

    def work() -> tuple[dict[str, Any], list[BoundCheck]]:
        if len(actions) != 1:
            raise InvalidInputError("choose one of --break, --verify, --claim, --construct")
        action = actions[0]
        outputs: dict[str, Any]
        if action == "break":
            inst = load()
            result = break_coalition(inst, seed=run_seed)
            outputs = {"action": action, **_partition_outputs(result)}
            return outputs, _partition_checks(result, inst.coalition)
        if action == "verify":
            inst = load()
            verdict = verify_coalition_success(
                inst, mode=mode, max_vertices=config.oracle_max_partition_vertices
            )
            outputs = {
                "action": action,
                "success": verdict.success,
                "mode": str(verdict.mode),
                "partitions_checked": verdict.partitions_checked,
            }
            if verdict.witness is None:
                return outputs, []
            outputs["witness"] = _partition_outputs(verdict.witness)
            return outputs, _partition_checks(verdict.witness, inst.coalition)
        if action == "claim":
            estimate = monte_carlo_claim(n, trials, run_seed)
            floor = float(estimate.bound) - 3.0 * estimate.sigma
            outputs = {
                "action": action,
                "trials": estimate.trials,
                "successes": estimate.successes,
                "frequency": estimate.frequency,
                "bound": jsonable(estimate.bound),
                "sigma": estimate.sigma,
            }
            met = estimate.meets_bound()
            return outputs, [at_least("good_event_frequency", estimate.frequency, floor, met)]
        inst = coalition_construct(k, r, n)
        verdict = verify_coalition_success(
            inst, mode=mode, max_vertices=config.oracle_max_partition_vertices
        )
        outputs = {
            "action": action,
            "instance": _instance_outputs(inst),
            "instance_text": format_instance(inst),
            "partitions_checked": verdict.partitions_checked,
        }
        return outputs, [exactly("coalition_survives", int(verdict.success), 1)]

    run_reported(
        "coalition",
        work,
        config=config,
        inputs=[*read_inputs(instance_path), f"{actions} {mode} {n} {k} {r} {trials}"],
        seed=run_seed,
        out=out,
    )
