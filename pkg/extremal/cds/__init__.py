"""Connected dominating sets: budgets, merging, and the three constructions."""

from .budget import (
    DominationBounds,
    binom_inv_expectation,
    binom_inv_expectation_sum,
    component_bound,
    domination_bounds,
    f_nk,
)
from .construct import (
    CdsResult,
    derandomized_cds,
    gen_cycle_of_cliques,
    greedy_cds,
    randomized_cds,
)
from .merge import greedy_dominating_set, merge_components
from .potential import (
    Decision,
    DomState,
    Potential,
    PsiArithmetic,
    PsiTracker,
    psi,
    selection_probability,
)

__all__ = [
    "CdsResult",
    "Decision",
    "DomState",
    "DominationBounds",
    "Potential",
    "PsiArithmetic",
    "PsiTracker",
    "binom_inv_expectation",
    "binom_inv_expectation_sum",
    "component_bound",
    "derandomized_cds",
    "domination_bounds",
    "f_nk",
    "gen_cycle_of_cliques",
    "greedy_cds",
    "greedy_dominating_set",
    "merge_components",
    "psi",
    "randomized_cds",
    "selection_probability",
]
