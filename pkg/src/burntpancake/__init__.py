"""Burnt pancake flipping: sorting signed permutations by prefix signed reversals."""

from .breakpoint import (
    AlternatingCycle,
    BreakpointGraph,
    Component,
    GreyEdge,
    black_edge_oriented,
    build_breakpoint_graph,
    components,
    cycles_interleave,
    grey_edge_oriented,
    is_simple,
    leftmost_structures,
)
from .distances import (
    DistanceReport,
    NotSimpleError,
    distance_report,
    hurdle_term,
    prefix_exchange_distance,
    psrd_lower_bound,
    psrd_simple,
)
from .oracle import EXCHANGES, SIGNED, OracleTable, build_oracle, enumerate_simple
from .perm import (
    PermutationError,
    SignedPermutation,
    apply_flips,
    apply_prefix_exchange,
    apply_prefix_flip,
    apply_signed_reversal,
    compose,
    double,
    format_permutation,
    graph_cycles,
    inverse,
    mimic_as_prefix_flips,
    parse_permutation,
    undouble,
)
from .sorter import (
    MoveClass,
    MoveKind,
    SortTrace,
    classify_move,
    find_proper_reversal,
    lemma5_move,
    lemma6_move,
    sort_oriented_component,
    sort_simple,
)
from .verify import check_lemma9, verify_theorems

__version__ = "0.1.0"
