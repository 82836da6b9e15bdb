"""Brute-force reference answers, kept apart from the algorithms they check."""

from .budget import DEFAULT_BUDGET, OracleBudget
from .enumerate import all_valid_partitions, exact_hamming_best, exact_pb_cdf
from .fair import CopyKind, FairOptimum, exact_fair_optimum
from .graphs import (
    ExactExpectation,
    exact_conditional_expectation,
    exact_gamma,
    exact_gamma_c,
    exact_girth,
    minimum_dominating_set,
    to_networkx,
)

__all__ = [
    "DEFAULT_BUDGET",
    "CopyKind",
    "ExactExpectation",
    "FairOptimum",
    "OracleBudget",
    "all_valid_partitions",
    "exact_conditional_expectation",
    "exact_fair_optimum",
    "exact_gamma",
    "exact_gamma_c",
    "exact_girth",
    "exact_hamming_best",
    "exact_pb_cdf",
    "minimum_dominating_set",
    "to_networkx",
]
