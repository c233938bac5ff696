"""Exact and asymptotic counting of rooted tree pattern embeddings.

An embedding of a rooted pattern tree (or forest) into a host tree is a
subset of host nodes whose induced ancestor order reproduces the pattern;
it is good when it contains the host root.  This package counts all and
good embeddings summed over three host families -- plane binary trees,
unordered binary trees, and plane trees with unrestricted degrees -- by
three mutually validating routes: a brute-force oracle, exact generating
functions, and singularity-analysis asymptotics.  On top of the counts it
computes the optimal-stopping probabilities they feed.
"""

from .asymptotics import (
    AsymEstimate,
    ComparisonVerdict,
    NonplaneConstants,
    asymptotic_estimate,
    compare_patterns,
    gautschi_inequality_holds,
    ratio_limit,
    solve_nonplane_constants,
)
from .errors import (
    BudgetError,
    DomainError,
    NumericError,
    TreeParseError,
    UndefinedProbabilityError,
    UnsupportedExactError,
    UnsupportedFamilyError,
)
from .families import (
    DEFAULT_ENUM_CAP,
    Family,
    complete_balanced,
    enumerate_family,
    family_size,
    wedderburn_etherington,
)
from .genfun import (
    embedding_count_via_series,
    embedding_series,
    family_series,
    nonplane_binary_counts,
    plane_binary_counts,
    planted_plane_counts,
)
from .oracle import (
    DEFAULT_SUBSET_BUDGET,
    EmbedCount,
    count_forest_in_family,
    count_forest_in_tree,
    count_in_family,
    count_in_tree,
    induced_substructure,
    is_subposet,
)
from .series import Series
from .stopping import (
    SimulationResult,
    balanced_identification_prob,
    best_choice_win_prob,
    exact_counts,
    simulate_best_choice,
)
from .trees import (
    DegreeSequence,
    MotzkinExpansion,
    PlaneForest,
    PlaneTree,
    binary_expansion_constant,
    canonical_nonplane,
    catalan,
    clip_forest_nonplane,
    count_symmetry_nodes,
    degree_sequence,
    forest_orderings,
    format_forest,
    format_tree,
    is_motzkin,
    motzkin_expansions,
    parse_forest,
    parse_tree,
    tree,
)

__version__ = "0.1.0"
