"""Shared utility functions for CLI commands."""

from __future__ import annotations

import sys
import time
from collections.abc import Callable
from pathlib import Path
from typing import Any

import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from extremal.core.config import ExtremalConfig
from extremal.core.constants import TELEMETRY_FILE_NAME
from extremal.core.errors import ExtremalError, InternalInvariantViolation
from extremal.core.telemetry import TelemetryReporter, build_telemetry_reporter
from extremal.reports import BoundCheck, RunReport, digest_inputs

Work = Callable[[], tuple[dict[str, Any], list[BoundCheck]]]

stderr_console = Console(stderr=True)


def setup_logging(log_dir: Path, verbose: bool = False) -> None:
    """Configure loguru logging.

    Args:
        log_dir: Directory for log files
        verbose: Enable verbose debug logging
    """
    # Remove default handler
    logger.remove()

    # Console handler
    log_level = "DEBUG" if verbose else "INFO"
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
        "<level>{level: <8}</level> | "
        "<cyan>{name}</cyan>:<cyan>{function}</cyan> - "
        "<level>{message}</level>",
        level=log_level,
    )

    # File handler
    logger.add(
        log_dir / "extremal_{time}.log",
        rotation="1 day",
        retention="7 days",
        level="DEBUG",
    )


def build_command_telemetry(config: ExtremalConfig, command: str) -> TelemetryReporter:
    return build_telemetry_reporter(
        file_path=config.log_dir / TELEMETRY_FILE_NAME,
        default_context={"command": command},
    )


def read_inputs(*paths: Path | None) -> list[str]:
    """File contents for the input digest; missing optional paths contribute nothing."""
    return [path.read_text(encoding="utf-8") for path in paths if path is not None]


def summary_table(report: RunReport) -> Table:
    table = Table(title=f"extremal {report.command}", show_header=True, header_style="bold cyan")
    table.add_column("Check", style="bold")
    table.add_column("Achieved", justify="right")
    table.add_column("", justify="center")
    table.add_column("Claimed", justify="right")
    table.add_column("Status", justify="center")
    for check in report.bounds:
        status = "[green]OK[/]" if check.holds else "[red]FAIL[/]"
        table.add_row(
            check.name, str(check.achieved), check.relation, str(check.claimed), status
        )
    if not report.bounds:
        table.add_row("No certified bounds", "", "", "", "")
    return table


def emit_report(report: RunReport, out: Path | None, indent: int) -> None:
    payload = report.to_json(indent=indent or None)
    if out is None:
        typer.echo(payload)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(payload + "\n", encoding="utf-8")
    logger.info("Report written to {}", out)


def run_reported(
    command: str,
    work: Work,
    *,
    config: ExtremalConfig,
    inputs: list[str],
    seed: int | None = None,
    out: Path | None = None,
    telemetry: TelemetryReporter | None = None,
) -> RunReport:
    """Run ``work``, re-check its bounds, emit the report and map failures to exit codes.

    ``work`` returns the report outputs and the independently re-checked
    bounds.  Toolkit errors exit with their own code; a failed bound exits 4.
    Pass ``telemetry`` when ``work`` records events of its own.
    """
    if telemetry is None:
        telemetry = build_command_telemetry(config, command)
    if seed is not None:
        telemetry.update_default_context({"seed": seed})
    started = time.perf_counter()
    try:
        outputs, bounds = work()
    except ExtremalError as exc:
        logger.error("{} failed: {}", command, exc)
        telemetry.error(
            "run_failed",
            context={"error": type(exc).__name__, "detail": str(exc), "exit_code": exc.exit_code},
        )
        raise typer.Exit(code=exc.exit_code) from exc

    report = RunReport(
        command=command,
        inputs_digest=digest_inputs(command, str(seed), *inputs),
        seed=seed,
        outputs=outputs,
        bounds=bounds,
        wall_time_seconds=round(time.perf_counter() - started, 6),
    )
    stderr_console.print(summary_table(report))
    emit_report(report, out, config.json_indent)
    telemetry.info(
        "run_completed",
        context={
            "ok": report.ok,
            "bounds": len(report.bounds),
            "wall_time_seconds": report.wall_time_seconds,
        },
    )
    if not report.ok:
        for check in report.failed():
            logger.error(
                "Certified bound {} failed: {} {} {}",
                check.name,
                check.achieved,
                check.relation,
                check.claimed,
            )
        raise typer.Exit(code=InternalInvariantViolation.exit_code)
    return report
