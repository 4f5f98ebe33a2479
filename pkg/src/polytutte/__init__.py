"""Exact computation of Tutte-type invariants for integer polymatroids.

The package computes the two-variable Tutte polynomial of a polymatroid by
two independent routes (basis-activity enumeration and a slice
deletion-contraction recursion), its one-variable interior and exterior
specializations, hypergraph rank functions and hypertrees, closed-form
coefficient identities, monotonicity comparators, and a connectivity
profile characterized by exterior coefficients.  All arithmetic is exact.
"""

from .bipoly import BiPoly, X, X_PLUS_Y_MINUS_1, Y
from .core import (
    Polymatroid,
    RankTable,
    SliceRange,
    enumerate_bases,
    enumerate_small_polymatroids,
    greedy_basis,
    rank_from_bases,
    slice_rank,
    validate_basis_set,
    validate_rank_table,
)
from .activity import (
    ActivityProfile,
    TightFamily,
    activities,
    activities_from_tight_sets,
    exterior_direct,
    interior_direct,
    tight_sets,
    tutte_direct,
)
from .recursion import (
    classical_tutte,
    exterior_dc,
    interior_dc,
    matroid_form,
    tutte_dc,
    tutte_to_matroid_form,
    uniform_matroid,
)
from .hypergraph import (
    Hypergraph,
    connectivity_profile,
    count_four_cycles,
    hypergraph_rank,
    hypertree_polymatroid,
)
from .formulas import (
    binomial,
    coefficient_report,
    coefficientwise_le,
    exterior_ceiling_check,
    near_top_coefficient,
    near_top_univariate,
    search_by_tutte,
    second_band_coefficient,
    second_band_univariate,
    top_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "ActivityProfile",
    "BiPoly",
    "Hypergraph",
    "Polymatroid",
    "RankTable",
    "SliceRange",
    "TightFamily",
    "X",
    "X_PLUS_Y_MINUS_1",
    "Y",
    "activities",
    "activities_from_tight_sets",
    "binomial",
    "classical_tutte",
    "coefficient_report",
    "coefficientwise_le",
    "connectivity_profile",
    "count_four_cycles",
    "enumerate_bases",
    "enumerate_small_polymatroids",
    "exterior_ceiling_check",
    "exterior_dc",
    "exterior_direct",
    "greedy_basis",
    "hypergraph_rank",
    "hypertree_polymatroid",
    "interior_dc",
    "interior_direct",
    "matroid_form",
    "near_top_coefficient",
    "near_top_univariate",
    "rank_from_bases",
    "search_by_tutte",
    "second_band_coefficient",
    "second_band_univariate",
    "slice_rank",
    "tight_sets",
    "top_coefficient",
    "tutte_dc",
    "tutte_direct",
    "tutte_to_matroid_form",
    "uniform_matroid",
    "validate_basis_set",
    "validate_rank_table",
]
