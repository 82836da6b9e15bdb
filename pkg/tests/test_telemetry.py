"""Tests for telemetry utilities."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from extremal.core.telemetry import (
    DiagnosticEvent,
    FileTelemetrySink,
    TelemetryReporter,
    build_telemetry_reporter,
)


class RecordingSink:
    def __init__(self) -> None:
        self.events: list[DiagnosticEvent] = []

    def emit(self, event: DiagnosticEvent) -> None:
        self.events.append(event)


def test_file_telemetry_sink_writes_json(tmp_path: Path) -> None:
    path = tmp_path / "telemetry.jsonl"
    reporter = TelemetryReporter(FileTelemetrySink(path))

    reporter.warning("potential near bound", context={"psi": Fraction(5, 2), "sets": {1}})

    content = path.read_text(encoding="utf-8").strip()
    assert content, "Expected telemetry file to contain a record"
    record = json.loads(content)

    assert record["message"] == "potential near bound"
    assert record["level"] == "WARNING"
    assert record["context"]["psi"] == 2.5
    assert record["context"]["sets"] == [1]


def test_reporter_merges_default_context() -> None:
    sink = RecordingSink()
    reporter = TelemetryReporter(sink, default_context={"command": "cds"})

    reporter.info("run_completed", context={"ok": True})
    reporter.update_default_context({"seed": 3})
    reporter.error("run_failed")

    assert sink.events[0].context == {"command": "cds", "ok": True}
    assert sink.events[1].level == "ERROR"
    assert sink.events[1].context == {"command": "cds", "seed": 3}


def test_build_telemetry_reporter_appends_lines(tmp_path: Path) -> None:
    path = tmp_path / "nested" / "telemetry.jsonl"
    reporter = build_telemetry_reporter(log_sink=False, file_path=path)

    reporter.info("first")
    reporter.info("second")

    lines = path.read_text(encoding="utf-8").splitlines()
    assert [json.loads(line)["message"] for line in lines] == ["first", "second"]
