"""Core infrastructure modules for the extremal toolkit."""

from .config import ExtremalConfig, load_config
from .constants import (
    CLAIM_COALITION_SIZE,
    CLAIM_GOOD_EVENT_BOUND,
    CLAIM_LIST_SIZE,
    REPORT_SCHEMA_VERSION,
    TELEMETRY_FILE_NAME,
)
from .errors import (
    Disconnected,
    DomainError,
    EdgeNotInHost,
    ExtremalError,
    HostDisconnected,
    InfeasibleParameters,
    InternalInvariantViolation,
    InvalidInputError,
    MalformedPartition,
    NotDominating,
    NotFound,
    PackingInfeasibleHint,
    PreconditionError,
    TooLarge,
)
from .rng import XorShift64Star, splitmix64
from .telemetry import (
    DiagnosticEvent,
    FileTelemetrySink,
    LogTelemetrySink,
    TelemetryReporter,
    TelemetrySink,
    build_telemetry_reporter,
)

__all__ = [
    "ExtremalConfig",
    "load_config",
    "CLAIM_COALITION_SIZE",
    "CLAIM_GOOD_EVENT_BOUND",
    "CLAIM_LIST_SIZE",
    "REPORT_SCHEMA_VERSION",
    "TELEMETRY_FILE_NAME",
    "ExtremalError",
    "InvalidInputError",
    "PreconditionError",
    "PackingInfeasibleHint",
    "InfeasibleParameters",
    "DomainError",
    "NotDominating",
    "HostDisconnected",
    "Disconnected",
    "EdgeNotInHost",
    "MalformedPartition",
    "TooLarge",
    "NotFound",
    "InternalInvariantViolation",
    "XorShift64Star",
    "splitmix64",
    "DiagnosticEvent",
    "TelemetrySink",
    "TelemetryReporter",
    "LogTelemetrySink",
    "FileTelemetrySink",
    "build_telemetry_reporter",
]
