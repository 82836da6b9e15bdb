"""Common constants shared across the toolkit."""

from __future__ import annotations

from fractions import Fraction

REPORT_SCHEMA_VERSION = 1
TELEMETRY_FILE_NAME = "telemetry.jsonl"

# Monte-Carlo claim: R has five members, every list has three entries.
CLAIM_COALITION_SIZE = 5
CLAIM_LIST_SIZE = 3
CLAIM_GOOD_EVENT_BOUND = Fraction(1) - Fraction(1, 16) - Fraction(5, 8)

# Seeded colouring attempts before the coalition breaker falls back to exhaustive search.
COLOURING_SAMPLE_ATTEMPTS = 512
COLOURING_EXHAUSTIVE_BITS = 20
