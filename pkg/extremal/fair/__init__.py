"""Nearly-fair representation of edge partitions by matchings, Hamilton cycles and T-factors."""

from .neighborhoods import (
    CoverNeighborhood,
    HamiltonNeighborhood,
    MatchingNeighborhood,
    Move,
    SampledNeighborhood,
    TFactorNeighborhood,
    distinct_copies,
    hamilton_neighborhood,
    matching_neighborhood,
    tfactor_neighborhood,
)
from .partition import (
    EdgePartition,
    RepVector,
    TargetVector,
    format_partition,
    linf_distance,
    load_partition,
    parse_partition,
    potential,
    random_partition,
    rep_vector,
    star_counterexample_partition,
    star_edges,
    target_vector,
)
from .search import (
    LocalSearchResult,
    fairness_bound,
    fairness_bound_squared,
    local_search,
    matching_bound,
    tfactor_bound,
)

__all__ = [
    "CoverNeighborhood",
    "EdgePartition",
    "HamiltonNeighborhood",
    "LocalSearchResult",
    "MatchingNeighborhood",
    "Move",
    "RepVector",
    "SampledNeighborhood",
    "TFactorNeighborhood",
    "TargetVector",
    "distinct_copies",
    "fairness_bound",
    "fairness_bound_squared",
    "format_partition",
    "hamilton_neighborhood",
    "linf_distance",
    "load_partition",
    "local_search",
    "matching_bound",
    "matching_neighborhood",
    "parse_partition",
    "potential",
    "random_partition",
    "rep_vector",
    "star_counterexample_partition",
    "star_edges",
    "target_vector",
    "tfactor_bound",
    "tfactor_neighborhood",
]
