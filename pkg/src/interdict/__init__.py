"""Exact biobjective shortest-path network interdiction.

A budget-constrained interdictor removes arcs from a directed network to
simultaneously lengthen the shortest source-sink paths of two independent
players. This package computes the full set of nondominated length pairs,
with witnessing strategies, exactly: a pseudopolynomial dynamic program
over the decomposition tree on two-terminal series-parallel graphs, and an
exhaustive oracle for arbitrary small instances.
"""

from .errors import (
    CoordinateOverflow,
    InstanceTooLarge,
    InterdictError,
    InvariantViolation,
    MalformedInstance,
    NotSeriesParallel,
)
from .model import (
    INF,
    MAX_COORD,
    Arc,
    EMPTY_STRATEGY,
    Instance,
    InterdictionStrategy,
    Point,
    POINT_INF,
    dominates,
    dump_instance,
    evaluate_strategy,
    instance_from_json_dict,
    instance_to_json_dict,
    is_feasible,
    load_instance,
    point_add,
    point_min,
    total_cost,
)
from .pareto import (
    EMPTY_LABELSET,
    LabelSet,
    filter_nondominated,
    filter_with_payloads,
    min_combine,
    minkowski_sum,
)
from .decompose import DecompositionTree, TreeNode, decompose, recompose
from .solver import (
    Decision,
    SolveResult,
    check_budget_monotone,
    check_label_bound,
    compose_parallel,
    compose_series,
    decide,
    frontier_rows,
    leaf_labels,
    rows_to_csv,
    solve,
    weakly_covered,
)
from .oracle import (
    DEFAULT_CAP,
    OracleResult,
    count_feasible_strategies,
    enumerate_frontier,
    shortest_path_length,
)
from .generators import (
    SplitMix64,
    gen_intractable,
    gen_random_digraph,
    gen_random_sp,
    predicted_intractable_frontier,
)

__version__ = "0.1.0"
