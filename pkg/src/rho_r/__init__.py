"""Rainbow replication graphs.

Decide whether every proper coloring of a blowup of a host graph contains a
rainbow transversal copy of the host, build explicit constructions, evaluate
the known bounds and search for minimum-size profiles.
"""

from .bounds import (
    COROLLARY_PARAMS,
    Th1Params,
    corollary_value,
    edge_min_sum,
    lm1_check,
    path_bounds,
    simple_lower,
    sorted_floor_check,
    th1_value,
)
from .constructions import (
    DoubleStarSpec,
    anticlique_profile,
    double_star_graph,
    double_star_profile,
    double_star_value,
    path_ub_profile,
    path_ub_value,
)
from .errors import (
    BudgetExhaustedError,
    DimensionError,
    DomainError,
    NoRainbowError,
    ParameterError,
    ResourceError,
    RhoError,
    ValidationError,
)
from .graph import (
    ColoringAssignment,
    HostGraph,
    Profile,
    anticlique_graph,
    canonical_cycle_profile,
    canonical_path_profile,
    complete_graph,
    cycle_graph,
    path_graph,
    replicate,
    total,
    validate_coloring,
)
from .search import (
    SearchConfig,
    SearchResult,
    min_profiles_cycle,
    min_profiles_general,
    min_profiles_path,
    verify_conjectures,
)
from .verifier import (
    RainbowAssignment,
    Verdict,
    Witness,
    check_anticlique,
    check_cycle,
    check_general,
    check_path,
    chromatic_number_exact,
    extract_rainbow,
    is_valid_rainbow,
    make_bad_coloring,
    max_weight_clique,
    random_proper_coloring,
    subset_value_path,
    weighted_cycle_chromatic,
)

__version__ = "0.1.0"

__all__ = [
    "anticlique_graph",
    "anticlique_profile",
    "BudgetExhaustedError",
    "canonical_cycle_profile",
    "canonical_path_profile",
    "check_anticlique",
    "check_cycle",
    "check_general",
    "check_path",
    "chromatic_number_exact",
    "ColoringAssignment",
    "complete_graph",
    "COROLLARY_PARAMS",
    "corollary_value",
    "cycle_graph",
    "DimensionError",
    "DomainError",
    "double_star_graph",
    "double_star_profile",
    "double_star_value",
    "DoubleStarSpec",
    "edge_min_sum",
    "extract_rainbow",
    "HostGraph",
    "is_valid_rainbow",
    "lm1_check",
    "make_bad_coloring",
    "max_weight_clique",
    "min_profiles_cycle",
    "min_profiles_general",
    "min_profiles_path",
    "NoRainbowError",
    "ParameterError",
    "path_bounds",
    "path_graph",
    "path_ub_profile",
    "path_ub_value",
    "Profile",
    "RainbowAssignment",
    "random_proper_coloring",
    "replicate",
    "ResourceError",
    "RhoError",
    "SearchConfig",
    "SearchResult",
    "simple_lower",
    "sorted_floor_check",
    "subset_value_path",
    "th1_value",
    "Th1Params",
    "total",
    "validate_coloring",
    "ValidationError",
    "Verdict",
    "verify_conjectures",
    "weighted_cycle_chromatic",
    "Witness",
]
