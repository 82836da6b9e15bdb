"""Hard caps for the exhaustive oracles."""

from __future__ import annotations

from dataclasses import dataclass

from extremal.core.config import ExtremalConfig
from extremal.core.errors import TooLarge


@dataclass(frozen=True, slots=True)
class OracleBudget:
    """Largest instance each oracle will enumerate; checked before any work starts."""

    max_girth_vertices: int = 12
    max_gamma_vertices: int = 20
    max_partition_vertices: int = 10
    max_matching_side: int = 6
    max_hamilton_vertices: int = 8
    max_kpn_vectors: int = 81
    max_hamming_bits: int = 16

    @classmethod
    def from_config(cls, config: ExtremalConfig) -> OracleBudget:
        return cls(
            max_girth_vertices=config.oracle_max_girth_vertices,
            max_gamma_vertices=config.oracle_max_gamma_vertices,
            max_partition_vertices=config.oracle_max_partition_vertices,
            max_matching_side=config.oracle_max_matching_side,
            max_hamilton_vertices=config.oracle_max_hamilton_vertices,
            max_kpn_vectors=config.oracle_max_kpn_vectors,
            max_hamming_bits=config.oracle_max_hamming_bits,
        )

    @staticmethod
    def require(what: str, size: int, cap: int) -> None:
        if size > cap:
            raise TooLarge(f"{what}: size {size} exceeds the oracle cap {cap}")


DEFAULT_BUDGET = OracleBudget()
