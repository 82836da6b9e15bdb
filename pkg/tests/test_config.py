"""Tests for ExtremalConfig defaults, overrides and validation."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from extremal.core.config import ExtremalConfig
from extremal.oracle import OracleBudget


def test_config_default_oracle_caps(tmp_path: Path) -> None:
    """Defaults keep every exhaustive oracle small enough to finish quickly."""
    config = ExtremalConfig(log_dir=tmp_path / "logs", data_dir=tmp_path / "data")

    assert config.default_seed == 42
    assert config.oracle_max_girth_vertices == 12
    assert config.oracle_max_gamma_vertices == 20
    assert config.oracle_max_partition_vertices == 10
    assert config.oracle_max_kpn_vectors == 81
    assert config.psi_precision_digits == 40
    assert config.json_indent == 2


def test_config_creates_directories(tmp_path: Path) -> None:
    config = ExtremalConfig(log_dir=tmp_path / "logs", data_dir=tmp_path / "data")

    assert config.log_dir.is_dir()
    assert config.data_dir.is_dir()


def test_config_reads_environment(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("EXTREMAL_ORACLE_MAX_GAMMA_VERTICES", "14")
    monkeypatch.setenv("EXTREMAL_DEFAULT_SEED", "7")

    config = ExtremalConfig(log_dir=tmp_path / "logs", data_dir=tmp_path / "data")

    assert config.oracle_max_gamma_vertices == 14
    assert config.default_seed == 7


def test_config_rejects_non_positive_caps(tmp_path: Path) -> None:
    with pytest.raises(ValidationError):
        ExtremalConfig(
            log_dir=tmp_path / "logs", data_dir=tmp_path / "data", oracle_max_kpn_vectors=0
        )


def test_config_rejects_low_precision(tmp_path: Path) -> None:
    with pytest.raises(ValidationError):
        ExtremalConfig(
            log_dir=tmp_path / "logs", data_dir=tmp_path / "data", psi_precision_digits=16
        )


def test_oracle_budget_follows_config(tmp_path: Path) -> None:
    config = ExtremalConfig(
        log_dir=tmp_path / "logs", data_dir=tmp_path / "data", oracle_max_matching_side=4
    )
    budget = OracleBudget.from_config(config)

    assert budget.max_matching_side == 4
    assert budget.max_gamma_vertices == config.oracle_max_gamma_vertices
