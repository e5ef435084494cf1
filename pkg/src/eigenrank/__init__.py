"""Pairwise-comparison decision engine.

Derives ratio-scale priorities from reciprocal judgment matrices,
composes them over hierarchies, takes supermatrix limits over networks
with feedback, and serves interactive judgment sessions over HTTP.
"""

from .compose import (
    GlobalPriorities,
    LabeledWeights,
    LevelPriorityMatrix,
    RankModeDemo,
    add_alternative,
    compose,
    copy_judgments,
    find_rank_reversal,
    level_matrix,
    rank_mode_demo,
)
from .estimators import (
    HierarchyComposer,
    PriorityEstimator,
    SupermatrixLimiter,
)
from .errors import (
    BadClusterWeights,
    DimensionMismatch,
    DuplicateLabel,
    DuplicatePair,
    EigenrankError,
    ElementInBothSides,
    InvalidAction,
    InvalidHierarchy,
    InvalidNetwork,
    InvalidRho,
    LabelMismatch,
    MissingMatrix,
    MissingPair,
    NoConvergence,
    NonPositiveValue,
    NotColumnStochastic,
    ParseError,
    ReciprocityViolation,
    SelfComparison,
    UnknownContext,
    UnknownElement,
    UnknownNode,
    UnknownPair,
    UnknownSession,
    ValidationFailed,
)
from .matrix import (
    PALETTE,
    ComparisonMatrix,
    Judgment,
    ScaleViolation,
    as_comparison_matrix,
    build_matrix,
    check_homogeneity,
    check_row_dominance,
    check_scale_agreement,
    is_consistent,
)
from .model_io import (
    Model,
    SeededJudgment,
    dump_model,
    dumps_model,
    load_model_file,
    parse_model,
)
from .priority import (
    DISTRIBUTIVE,
    IDEAL,
    ConsistencyReport,
    PriorityVector,
    consistency_report,
    consistent_completion,
    derive_priorities,
    random_index,
)
from .session import (
    Session,
    SessionStore,
    compute_snapshot,
    contexts_for,
    what_if,
)
from .sets import (
    IndependenceViolation,
    SetJudgment,
    check_independence,
    expected_set_value,
)
from .structure import (
    Component,
    Hierarchy,
    Network,
    Node,
    ValidationIssue,
    ValidationReport,
    check_group_homogeneity,
    hierarchy_to_network,
    validate_hierarchy,
    validate_network,
)
from .supermatrix import (
    LimitResult,
    Supermatrix,
    assemble_supermatrix,
    hierarchy_supermatrix,
    limit_supermatrix,
    network_priorities,
)

__version__ = "0.1.0"

__all__ = [
    "BadClusterWeights",
    "ComparisonMatrix",
    "Component",
    "ConsistencyReport",
    "DISTRIBUTIVE",
    "DimensionMismatch",
    "DuplicateLabel",
    "DuplicatePair",
    "EigenrankError",
    "ElementInBothSides",
    "GlobalPriorities",
    "Hierarchy",
    "HierarchyComposer",
    "IDEAL",
    "IndependenceViolation",
    "InvalidAction",
    "InvalidHierarchy",
    "InvalidNetwork",
    "InvalidRho",
    "Judgment",
    "LabelMismatch",
    "LabeledWeights",
    "LevelPriorityMatrix",
    "LimitResult",
    "MissingMatrix",
    "MissingPair",
    "Model",
    "Network",
    "NoConvergence",
    "Node",
    "NonPositiveValue",
    "NotColumnStochastic",
    "PALETTE",
    "ParseError",
    "PriorityEstimator",
    "PriorityVector",
    "RankModeDemo",
    "ReciprocityViolation",
    "ScaleViolation",
    "SeededJudgment",
    "SelfComparison",
    "Session",
    "SessionStore",
    "SetJudgment",
    "Supermatrix",
    "SupermatrixLimiter",
    "UnknownContext",
    "UnknownElement",
    "UnknownNode",
    "UnknownPair",
    "UnknownSession",
    "ValidationFailed",
    "ValidationIssue",
    "ValidationReport",
    "add_alternative",
    "as_comparison_matrix",
    "assemble_supermatrix",
    "build_matrix",
    "check_group_homogeneity",
    "check_homogeneity",
    "check_independence",
    "check_row_dominance",
    "check_scale_agreement",
    "compose",
    "compute_snapshot",
    "consistency_report",
    "consistent_completion",
    "contexts_for",
    "copy_judgments",
    "derive_priorities",
    "dump_model",
    "dumps_model",
    "expected_set_value",
    "find_rank_reversal",
    "hierarchy_supermatrix",
    "hierarchy_to_network",
    "is_consistent",
    "level_matrix",
    "limit_supermatrix",
    "load_model_file",
    "network_priorities",
    "parse_model",
    "rank_mode_demo",
    "random_index",
    "validate_hierarchy",
    "validate_network",
    "what_if",
]
