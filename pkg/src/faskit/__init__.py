"""Feedback arc sets in degree-bounded oriented multigraphs.

Solvers with certified guarantees (size at most m/3 for maximum degree
5, at most 24n/29 for degree-5 multigraphs), an exact subset-DP oracle,
extremal instance constructions, closed-form bound calculators and text
serialization for graphs and certificates.
"""
from . import errors
from .bounded5 import DegreePartition, classify_partition, composite_delete, solve_bounded5, surplus_chain
from .bounds import alon_bound, berger_bound, coefficient_table, combined_bound, vertex_bound
from .exact import cycle_family_bound, exact_fas
from .generators import (
    d7_cycle_family,
    d8_cycle_family,
    gen_d7,
    gen_d8,
    gen_d14,
    gen_d24,
    gen_random,
    gen_random_regular5,
    gen_triangles,
    regularize,
)
from .graph import (
    FeedbackArcSet,
    Ordering,
    OrientedMultigraph,
    backward_arcs,
    induced_subgraph,
    three_cycles_through,
    transitive_triangles,
    verify_fas,
)
from .graphio import (
    format_record,
    parse_fas,
    parse_graph,
    parse_ordering,
    write_fas,
    write_graph,
    write_ordering,
    write_trace,
)
from .reductions import (
    ReductionKind,
    ReductionRecord,
    ReductionTrace,
    apply,
    detect,
    lift,
    replay,
)
from .regular5 import (
    AuxiliaryGraph,
    QClass,
    QSet,
    build_aux_graph,
    extend_ordering,
    independent_set,
    q_set,
    solve_regular5,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "AuxiliaryGraph",
    "DegreePartition",
    "FeedbackArcSet",
    "Ordering",
    "OrientedMultigraph",
    "QClass",
    "QSet",
    "ReductionKind",
    "ReductionRecord",
    "ReductionTrace",
    "alon_bound",
    "apply",
    "backward_arcs",
    "berger_bound",
    "build_aux_graph",
    "classify_partition",
    "coefficient_table",
    "combined_bound",
    "composite_delete",
    "cycle_family_bound",
    "d7_cycle_family",
    "d8_cycle_family",
    "detect",
    "exact_fas",
    "extend_ordering",
    "format_record",
    "gen_d7",
    "gen_d8",
    "gen_d14",
    "gen_d24",
    "gen_random",
    "gen_random_regular5",
    "gen_triangles",
    "independent_set",
    "induced_subgraph",
    "lift",
    "parse_fas",
    "parse_graph",
    "parse_ordering",
    "q_set",
    "regularize",
    "replay",
    "solve_bounded5",
    "solve_regular5",
    "surplus_chain",
    "three_cycles_through",
    "transitive_triangles",
    "verify_fas",
    "vertex_bound",
    "write_fas",
    "write_graph",
    "write_ordering",
    "write_trace",
]
