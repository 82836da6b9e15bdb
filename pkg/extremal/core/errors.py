"""Exception hierarchy shared by every module.

Each error carries the process exit code the CLI uses for it.
"""

from __future__ import annotations


class ExtremalError(Exception):
    """Base error for toolkit failures."""

    exit_code: int = 1


class InvalidInputError(ExtremalError):
    """Raised when an input file or argument cannot be parsed."""

    exit_code = 2


class PreconditionError(ExtremalError):
    """Raised when an operation's precondition does not hold."""

    exit_code = 3


class PackingInfeasibleHint(PreconditionError):
    """Raised when 2 * d1 * d2 >= n, so no packing is guaranteed."""


class InfeasibleParameters(PreconditionError):
    """Raised when the requested parameters admit no construction."""


class DomainError(PreconditionError):
    """Raised when a numeric argument lies outside a function's domain."""


class NotDominating(PreconditionError):
    """Raised when a vertex set expected to dominate does not."""


class HostDisconnected(PreconditionError):
    """Raised when a connected host graph is required."""


class Disconnected(PreconditionError):
    """Raised by oracles that need a connected graph."""


class EdgeNotInHost(PreconditionError):
    """Raised when a subgraph uses an edge missing from the host."""


class MalformedPartition(PreconditionError):
    """Raised when parts overlap or fail to cover the ground set."""


class TooLarge(PreconditionError):
    """Raised when an exhaustive search exceeds its budget."""


class NotFound(PreconditionError):
    """Raised when a structure guaranteed by a precondition is not found."""


class InternalInvariantViolation(ExtremalError):
    """Raised when an invariant guaranteed by a proof fails at runtime."""

    exit_code = 4
