"""Reconfiguration of induced pattern copies under multi-token rules.

The package solves reachability between induced copies of a pattern graph
inside a host graph, where one move may jump or slide up to k tokens at once.
It ships an exhaustive reference solver, a compressed-graph solver that is
polynomial for each fixed value of (pattern size minus budget), generators
for three hardness gadgets, slide-step expansion on even-hole-free hosts,
and structural analysis (holes, perfection, bipartiteness).
"""

from .analysis import (
    HoleReport,
    components,
    diameter,
    find_holes,
    is_bipartite,
    is_even_hole_free,
    is_odd_hole_free,
    is_perfect,
)
from .bruteforce import (
    ReconfigGraph,
    WordInstance,
    build_reconfig_graph,
    has_balanced_biclique,
    parse_word_text,
    solve_bfs,
    word_reachability,
    word_to_text,
)
from .errors import (
    FormatError,
    InvalidInputError,
    IsisorError,
    PreconditionError,
    ResourceLimitError,
)
from .graphs import (
    Graph,
    VertexSet,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    duplicate_set,
    empty_graph,
    graph_to_text,
    induced_subgraph,
    join_sets,
    neighborhood,
    parse_graph_text,
    path_graph,
    replace_vertex,
)
from .isomorphism import (
    ComponentDecomposition,
    canonical_key,
    component_decomposition,
    enumerate_induced_copies,
    find_induced_copy,
    is_induced_copy,
    is_isomorphic,
)
from .reductions import (
    GadgetOutput,
    balanced_biclique_gadget,
    induced_subgraph_gadget,
    instance_to_text,
    parse_instance_text,
    word_gadget,
)
from .rules import (
    ReconfigInstance,
    ReconfigSequence,
    Rule,
    VerificationResult,
    adjacent,
    expand_slide_sequence,
    expand_slide_step,
    parse_sequence_text,
    sequence_to_text,
    verify_sequence,
)
from .xp import CompressedGraph, build_compressed, edge_test, solve_xp

__all__ = [name for name in dir() if not name.startswith("_")]
