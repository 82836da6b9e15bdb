"""The class-assignment coalition game: constructions, the breaker and verifiers."""

from .breaker import (
    acyclic_completion,
    break_coalition,
    claim_partition,
    coalition_construct,
    find_two_disjoint_cycles,
)
from .instance import (
    CoalitionInstance,
    PartitionResult,
    format_instance,
    load_instance,
    parse_instance,
    verify_partition,
)
from .verify import (
    ClaimEstimate,
    CoalitionVerdict,
    VerificationMode,
    monte_carlo_claim,
    set_partitions,
    verify_coalition_success,
)

__all__ = [
    "ClaimEstimate",
    "CoalitionInstance",
    "CoalitionVerdict",
    "PartitionResult",
    "VerificationMode",
    "acyclic_completion",
    "break_coalition",
    "claim_partition",
    "coalition_construct",
    "find_two_disjoint_cycles",
    "format_instance",
    "load_instance",
    "monte_carlo_claim",
    "parse_instance",
    "set_partitions",
    "verify_coalition_success",
    "verify_partition",
]
