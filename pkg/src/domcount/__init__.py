"""Exact counting of minimum dominating sets and maximum independent sets
on trees and forests, with exhaustive verification of growth bounds and
the extremal two-level spider family."""

from .domination import (
    DomResult,
    DomStateTable,
    MinCount,
    brute_force_domination,
    count_min_dominating_sets,
    domination_number,
    dominating_state_table,
    enumerate_min_dominating_sets,
)
from .family import (
    FamilySpec,
    FamilyTree,
    LocalPartition,
    TableRow,
    TrendRow,
    balanced_partition,
    build_family_tree,
    closed_form_count,
    family_tree_text,
    growth_trend,
    local_mds_partition,
    optimize_k,
    parse_family_roles,
)
from .forest import (
    Forest,
    ForestError,
    RootedTree,
    VertexClassification,
    build_forest,
    classify_vertices,
    disjoint_union,
    forest_to_text,
    parse_forest,
    path,
    root_at,
    spider,
    star,
)
from .independence import (
    IndResult,
    SpiderShape,
    brute_force_independence,
    count_max_independent_sets,
    enumerate_max_independent_sets,
    independence_number,
    is_subdivided_star,
)
from .search import (
    DiagnosticsReport,
    ExtremalRecord,
    GrowthBaseBracket,
    MisBoundCheck,
    SearchReport,
    compute_growth_base,
    extremal_diagnostics,
    mis_order_bound,
    report_csv_lines,
    report_text,
    search_extremal,
    verify_mds_bound,
    verify_mis_bound,
)
from .treegen import CanonicalCode, canonical_code, generate_trees

__all__ = [
    "CanonicalCode",
    "DiagnosticsReport",
    "DomResult",
    "DomStateTable",
    "ExtremalRecord",
    "FamilySpec",
    "FamilyTree",
    "Forest",
    "ForestError",
    "GrowthBaseBracket",
    "IndResult",
    "LocalPartition",
    "MinCount",
    "MisBoundCheck",
    "RootedTree",
    "SearchReport",
    "SpiderShape",
    "TableRow",
    "TrendRow",
    "VertexClassification",
    "balanced_partition",
    "brute_force_domination",
    "brute_force_independence",
    "build_family_tree",
    "build_forest",
    "canonical_code",
    "classify_vertices",
    "closed_form_count",
    "compute_growth_base",
    "count_max_independent_sets",
    "count_min_dominating_sets",
    "disjoint_union",
    "dominating_state_table",
    "domination_number",
    "enumerate_max_independent_sets",
    "enumerate_min_dominating_sets",
    "extremal_diagnostics",
    "family_tree_text",
    "forest_to_text",
    "generate_trees",
    "growth_trend",
    "independence_number",
    "is_subdivided_star",
    "local_mds_partition",
    "mis_order_bound",
    "optimize_k",
    "parse_family_roles",
    "parse_forest",
    "path",
    "report_csv_lines",
    "report_text",
    "root_at",
    "search_extremal",
    "spider",
    "star",
    "verify_mds_bound",
    "verify_mis_bound",
]
