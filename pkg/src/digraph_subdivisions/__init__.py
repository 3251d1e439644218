"""Certificate-producing subdivision extractors for digraphs, with exact
brute-force oracles, seeded generators, and a verifying certificate format.

Two hypothesis regimes are covered: minimum out-degree (blocked oriented
paths, two-block cycles, triple paths, in-arborescences) and dichromatic
number (arbitrary patterns via level decompositions). Every extractor emits a
SubdivisionCertificate that verify_subdivision accepts; the oracle provides
independent ground truth at small sizes.
"""

from .digraphs import (
    BfsTree,
    Degrees,
    Digraph,
    PathSystem,
    StrongComponents,
    bfs_tree,
    converse,
    degrees,
    digraph_hash,
    format_edge_list,
    induced_subdigraph,
    is_generator,
    parse_edge_list,
    strong_components,
    without_arcs,
    without_vertices,
)
from .errors import (
    BudgetExceeded,
    FormatError,
    HypothesisUnmet,
    InternalBug,
    SizeGuardExceeded,
)
from .menger import DisjointPaths, disjoint_paths
from .patterns import (
    PatternSpec,
    SubdivisionCertificate,
    VerifyReport,
    build_blocked_path,
    build_branching,
    build_complete_digraph,
    build_pattern,
    build_transitive_tournament,
    build_triple_path,
    build_two_block_cycle,
    certificate_from_json,
    certificate_to_json,
    custom_pattern,
    verify_subdivision,
)
from .generators import FAMILIES, GenSpec, generate, generate_descriptor, parse_genspec
from .oracle import brute_min_vertex_cut, oracle_find_subdivision, oracle_has_subdivision
from .paths import find_blocked_path, find_c_k_1, find_long_cycle
from .forks import find_triple_path, find_two_block_cycle
from .arborescence import (
    Packing,
    b_size,
    f_bound,
    find_branching,
    maximal_packing,
    path_system,
    t_bound,
)
from .dichromatic import (
    Dicolouring,
    best_level,
    critical_subdigraph,
    dichromatic_number,
    find_subdivision_dic,
    greedy_embed_forest,
    is_two_sink,
    is_two_source,
    two_source_step,
    verify_dicolouring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
