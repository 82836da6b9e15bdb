"""Configuration management for the extremal toolkit."""

from __future__ import annotations

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ExtremalConfig(BaseSettings):
    """Runtime configuration.

    Uses Pydantic v2 settings with environment variable support, so every
    oracle cap can be overridden with e.g. ``EXTREMAL_ORACLE_MAX_GAMMA_VERTICES``.
    """

    model_config = SettingsConfigDict(
        env_prefix="EXTREMAL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Paths
    log_dir: Path = Field(default=Path("logs"), description="Directory for logs and telemetry")
    data_dir: Path = Field(default=Path("data"), description="Directory for generated inputs")

    # Reproducibility
    default_seed: int = Field(default=42, ge=0, description="Seed used when --seed is omitted")

    # Oracle caps
    oracle_max_girth_vertices: int = Field(
        default=12, description="Largest n for exhaustive simple-cycle girth"
    )
    oracle_max_gamma_vertices: int = Field(
        default=20, description="Largest n for exact domination numbers"
    )
    oracle_max_partition_vertices: int = Field(
        default=10, description="Largest n for set-partition enumeration"
    )
    oracle_max_matching_side: int = Field(
        default=6, description="Largest side of K_{n,n} for the perfect matching oracle"
    )
    oracle_max_hamilton_vertices: int = Field(
        default=8, description="Largest n of K_n for the Hamilton cycle oracle"
    )
    oracle_max_kpn_vectors: int = Field(
        default=81, description="Largest p^n for the exact K(n,p) search"
    )
    oracle_max_hamming_bits: int = Field(
        default=16, description="Largest n for the exhaustive Hamming centre search"
    )

    # Numerics
    psi_precision_digits: int = Field(
        default=40, description="Decimal digits used by the float-mode potential"
    )
    psi_slack: float = Field(
        default=1e-9, description="Monotonicity slack for the float-mode potential"
    )
    rational_p_bits: int = Field(
        default=40, description="p is rounded to a rational with denominator 2**bits"
    )

    # Search tuning
    packing_max_restarts: int = Field(
        default=64, description="Seeded restarts of the initial packing search"
    )
    fair_sample_size: int = Field(
        default=2000, description="Neighbours drawn per step in sampled (non-certifying) mode"
    )

    # Output
    json_indent: int = Field(default=2, ge=0, description="Indentation of JSON reports")

    @field_validator(
        "oracle_max_girth_vertices",
        "oracle_max_gamma_vertices",
        "oracle_max_partition_vertices",
        "oracle_max_matching_side",
        "oracle_max_hamilton_vertices",
        "oracle_max_kpn_vectors",
        "oracle_max_hamming_bits",
        "packing_max_restarts",
        "fair_sample_size",
    )
    @classmethod
    def validate_positive(cls, value: int) -> int:
        """Caps and search sizes must be positive."""
        if value <= 0:
            raise ValueError("value must be positive")
        return value

    @field_validator("psi_precision_digits")
    @classmethod
    def validate_precision(cls, value: int) -> int:
        """Keep the potential comfortably above 80-bit floating point."""
        if value < 24:
            raise ValueError("psi_precision_digits must be at least 24")
        return value

    def model_post_init(self, __context: object) -> None:
        """Create directories after initialization."""
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.data_dir.mkdir(parents=True, exist_ok=True)


def load_config() -> ExtremalConfig:
    """Load configuration from environment and .env file."""
    return ExtremalConfig()
