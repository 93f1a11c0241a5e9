"""Partition directed multigraph edge sets into directed cycles.

The central dichotomy: a finite digraph's edge set can be partitioned into
simple directed cycles exactly when every vertex subset has equally many
ingoing and outgoing edges (equivalently, every vertex has equal in- and
out-degree).  :func:`decompose` returns the partition on one side and a
canonical overloaded-set certificate on the other; both outcomes are
first-class values.
"""

from .balance import (
    ImbalanceCertificate,
    brute_force_overloaded,
    degree_imbalance,
    is_balanced,
    refine_overloaded,
    saturate_overloaded,
)
from .decompose import (
    CyclePartition,
    Dicycle,
    NoDicycleError,
    decompose,
    decompose_component,
    extract_cycle_through,
)
from .digraph import Cut, Digraph
from .edgelist import EdgeListParseError, format_edge_list, load_digraph, parse_edge_list
from .generate import GenSpec, perturb, random_cycle_union, shuffle_stream
from .stream import POLICIES, StreamEngine, StreamStats
from .verify import (
    CrosscheckReport,
    check_certificate,
    check_partition,
    exhaustive_decomposition_search,
    theorem_crosscheck,
)

__all__ = [
    "Cut",
    "CyclePartition",
    "CrosscheckReport",
    "Dicycle",
    "Digraph",
    "EdgeListParseError",
    "GenSpec",
    "ImbalanceCertificate",
    "NoDicycleError",
    "POLICIES",
    "StreamEngine",
    "StreamStats",
    "brute_force_overloaded",
    "check_certificate",
    "check_partition",
    "decompose",
    "decompose_component",
    "degree_imbalance",
    "exhaustive_decomposition_search",
    "extract_cycle_through",
    "format_edge_list",
    "is_balanced",
    "load_digraph",
    "parse_edge_list",
    "perturb",
    "random_cycle_union",
    "refine_overloaded",
    "saturate_overloaded",
    "shuffle_stream",
    "theorem_crosscheck",
]
