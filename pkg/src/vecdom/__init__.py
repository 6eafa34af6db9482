"""Vector domination: exact solvers, greedy approximations, gadgets.

The central object is :class:`~vecdom.variants.Instance`: a graph with
per-vertex demands, a neighbourhood convention (open or closed), and a
scope (do set members owe their own demand or not).  Named variants from
the catalogue compile onto that one representation, and every solver
consumes it or the raw (graph, demands) pair.
"""

from .approx import (
    MulticoverInstance,
    greedy_multicover,
    greedy_multiple_domination,
    greedy_total_vector,
    greedy_vector_domination,
)
from .decomposition import (
    CotreeNode,
    ThresholdOrdering,
    build_modified_cotree,
    is_cograph,
    is_threshold,
    threshold_elimination_order,
)
from .errors import (
    AlphaOutOfRangeError,
    InfeasibleError,
    NotATreeError,
    NotCographError,
    NotCompleteError,
    NotThresholdError,
    TooLargeError,
    VecdomError,
    WrongVariantError,
)
from .exact import (
    DEFAULT_ORACLE_CAP,
    auto_solve,
    brute_force_minimum,
    solve_cograph,
    solve_complete_total,
    solve_complete_vector,
    solve_threshold_vector,
    solve_tree_vector,
    threshold_minimum_size,
)
from .feasibility import (
    CoverageState,
    FeasibilityResult,
    Solution,
    coverage_target,
    coverage_value,
    is_feasible,
    marginal_gain,
)
from .gadgets import (
    GadgetOutput,
    SandwichClaim,
    SandwichReport,
    gadget_alpha_domination,
    gadget_alpha_rate,
    gadget_k_domination,
    gadget_replicate,
    gadget_total_alpha,
    upper_witness,
    verify_sandwich,
)
from .graph import (
    Graph,
    build_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    join,
    path_graph,
    reverse_bfs_order,
    star_graph,
)
from .variants import (
    ExplicitThreshold,
    FractionThreshold,
    Inequality,
    Instance,
    InstanceDiagnostics,
    Neighborhood,
    Scope,
    UniformThreshold,
    VariantSpec,
    compile_variant,
    demand_bound,
    named_variant,
    validate_instance,
    variant_catalogue,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRangeError",
    "CotreeNode",
    "CoverageState",
    "DEFAULT_ORACLE_CAP",
    "ExplicitThreshold",
    "FeasibilityResult",
    "FractionThreshold",
    "GadgetOutput",
    "Graph",
    "Inequality",
    "InfeasibleError",
    "Instance",
    "InstanceDiagnostics",
    "MulticoverInstance",
    "Neighborhood",
    "NotATreeError",
    "NotCographError",
    "NotCompleteError",
    "NotThresholdError",
    "SandwichClaim",
    "SandwichReport",
    "Scope",
    "Solution",
    "ThresholdOrdering",
    "TooLargeError",
    "UniformThreshold",
    "VariantSpec",
    "VecdomError",
    "WrongVariantError",
    "auto_solve",
    "brute_force_minimum",
    "build_graph",
    "build_modified_cotree",
    "compile_variant",
    "complete_graph",
    "coverage_target",
    "coverage_value",
    "cycle_graph",
    "demand_bound",
    "disjoint_union",
    "gadget_alpha_domination",
    "gadget_alpha_rate",
    "gadget_k_domination",
    "gadget_replicate",
    "gadget_total_alpha",
    "greedy_multicover",
    "greedy_multiple_domination",
    "greedy_total_vector",
    "greedy_vector_domination",
    "induced_subgraph",
    "is_cograph",
    "is_feasible",
    "is_threshold",
    "join",
    "marginal_gain",
    "named_variant",
    "path_graph",
    "reverse_bfs_order",
    "solve_cograph",
    "solve_complete_total",
    "solve_complete_vector",
    "solve_threshold_vector",
    "solve_tree_vector",
    "star_graph",
    "threshold_elimination_order",
    "threshold_minimum_size",
    "upper_witness",
    "validate_instance",
    "variant_catalogue",
    "verify_sandwich",
]
