"""Integer rebalancing of weighted digraphs.

A weighted digraph is balanced when every vertex's incoming weight sum
equals its outgoing sum.  If those common sums are integers, the edge
weights can be rewritten into nonnegative integers with the same sums;
this package does the rewrite exactly, constructs balanced weightings
from integer vertex-weight vectors, and generates randomized balanced
test instances.
"""

from .bipartite import (
    BipartiteGraph,
    DecimalCycle,
    check_balanced_bipartite,
    decimal_degree,
    lift,
)
from .digraph import (
    Digraph,
    WeightedDigraph,
    check_balanced,
    in_sum,
    is_integral,
    is_strongly_connected,
    out_sum,
    strongly_connected_components,
)
from .errors import (
    GraphInputError,
    InfeasibleError,
    InvariantViolationError,
    NonIntegerVertexWeightError,
    NotBalancedError,
    NotCompletelyDecimalError,
)
from .feasibility import (
    builtin_graph,
    canonical_fractional_instance,
    generate_balanced_instance,
    random_strongly_connected_digraph,
    solve_feasible_w,
)
from .integerize import (
    DecimalStatus,
    IntegerizeReport,
    IntegerizeStep,
    classify,
    count_decimal_edges,
    cycle_epsilon,
    cycle_shift,
    find_completely_decimal_cycle,
    integerize,
)
from .rational import (
    Rational,
    decimal_part,
    format_weight,
    is_decimal,
    parse_weight,
)

__all__ = [
    "BipartiteGraph",
    "DecimalCycle",
    "DecimalStatus",
    "Digraph",
    "GraphInputError",
    "InfeasibleError",
    "IntegerizeReport",
    "IntegerizeStep",
    "InvariantViolationError",
    "NonIntegerVertexWeightError",
    "NotBalancedError",
    "NotCompletelyDecimalError",
    "Rational",
    "WeightedDigraph",
    "builtin_graph",
    "canonical_fractional_instance",
    "check_balanced",
    "check_balanced_bipartite",
    "classify",
    "count_decimal_edges",
    "cycle_epsilon",
    "cycle_shift",
    "decimal_degree",
    "decimal_part",
    "find_completely_decimal_cycle",
    "format_weight",
    "generate_balanced_instance",
    "in_sum",
    "integerize",
    "is_decimal",
    "is_integral",
    "is_strongly_connected",
    "lift",
    "out_sum",
    "parse_weight",
    "random_strongly_connected_digraph",
    "solve_feasible_w",
    "strongly_connected_components",
]

__version__ = "0.1.0"
