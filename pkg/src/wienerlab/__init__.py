"""Maximum Wiener index of trees with fixed order and diameter.

Exact tree tools (distances, two independent Wiener routes, canonical
forms, shape tests), the broom and leaf relocation moves with their exact
Wiener deltas and thresholds, double/triple broom optimisers, and
brute-force extremal search over all free trees of small order.
"""

from .brooms import (
    BroomComparison,
    BroomSpec,
    best_double_broom,
    best_triple_broom,
    compare_brooms,
    double_broom,
    proposition_bound,
    theorem_bound,
    triple_broom,
    wiener_broom,
)
from .enumeration import ExtremalRecord, extremal_table, extremal_trees, free_trees
from .errors import (
    CeilingError,
    DomainError,
    InvariantViolation,
    StaleContextError,
    TreeValidationError,
    UsageError,
    WienerLabError,
)
from .transforms import (
    LeafPath,
    SpecialContext,
    balance_deltas,
    find_special_contexts,
    keep_inequality,
    leaf_path,
    offpath_bound,
    okok_bounds,
    predicted_broom_delta_full,
    predicted_broom_delta_reduced,
    predicted_leaf_delta,
    relocate_broom,
    relocate_leaf,
    scan_special,
    threshold_f,
    threshold_g,
)
from .tree import (
    ShapeClass,
    Tree,
    broom_vertices,
    canonical_form,
    classify,
    diameter,
    distances_from,
    eccentricity,
    format_tree_text,
    is_double_broom,
    leaves,
    parse_tree_text,
    path_tree,
    random_tree,
    star_tree,
    tree_from_edges,
    wiener_edge_decomposition,
    wiener_pairwise,
)
from .verification import VerificationReport, verify

__version__ = "0.1.0"
