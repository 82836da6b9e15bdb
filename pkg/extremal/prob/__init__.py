"""Probabilistic tools: Poisson-binomial sums, Hamming-ball rounding and K(n, p)."""

from .hamming import (
    HammingResult,
    L1BallInstance,
    clamp_center,
    hamming,
    hamming_center,
    l1_distance,
    load_ball_instance,
    random_ball_instance,
)
from .kpn import (
    KpnResult,
    RootVector,
    all_root_vectors,
    hegedus_bound,
    is_prime,
    kpn_bruteforce,
    kpn_cover_relation,
    kpn_cover_relation_numeric,
    orthogonality_bound,
)
from .poisson import (
    PoissonBinomial,
    binomial_median_check,
    median_check,
    medians,
    pb_cdf,
    pb_mean,
    pb_pmf,
    pb_pmf_numeric,
)

__all__ = [
    "HammingResult",
    "KpnResult",
    "L1BallInstance",
    "PoissonBinomial",
    "RootVector",
    "all_root_vectors",
    "binomial_median_check",
    "clamp_center",
    "hamming",
    "hamming_center",
    "hegedus_bound",
    "is_prime",
    "kpn_bruteforce",
    "kpn_cover_relation",
    "kpn_cover_relation_numeric",
    "l1_distance",
    "load_ball_instance",
    "median_check",
    "medians",
    "orthogonality_bound",
    "pb_cdf",
    "pb_mean",
    "pb_pmf",
    "pb_pmf_numeric",
    "random_ball_instance",
]
