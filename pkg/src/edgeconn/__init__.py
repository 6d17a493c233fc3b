"""Exact connectivity invariants and forbidden-subgraph verification for small graphs."""

from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    bipartition_mask,
    diameter,
    distance_matrix,
    from_edges,
    from_graph6,
    induced,
    is_bipartite,
    is_connected,
    to_graph6,
)
from .invariants import (
    CutCertificate,
    InvariantReport,
    clique_number,
    compute_report,
    cut_interior_property,
    edge_connectivity,
    is_chordal,
    max_degree,
    min_degree,
    min_edge_cut,
    vertex_connectivity,
)
from .iso import (
    Pattern,
    PatternSet,
    are_isomorphic,
    canonical_form,
    contains_induced,
    find_induced,
    is_free,
    longest_induced_path_order,
    maximal_common_induced_subgraphs,
    pattern_equivalent,
    pattern_preceq,
    pattern_set,
    pattern_strictly_preceq,
)
from .matching import matching_number, maximum_matching
from .conditions import (
    CONDITION_NAMES,
    Condition,
    ImplicationRow,
    condition_holds,
    condition_implication_rows,
)
from .enumeration import (
    MAX_ENUM_ORDER,
    connected_level,
    ensure_level,
    enumerate_connected,
    expand_children,
    filter_free,
    read_graph6_stream,
    write_graph6_stream,
)
from .atlas import (
    CertificateError,
    FamilyMember,
    NamedGraphSpec,
    bowtie,
    bridged_triangles,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    known_witness,
    make_family_member,
    make_named,
    parse_pattern_set,
    parse_pattern_token,
    path_graph,
    recognize_pattern,
    spider,
    star,
    triangle_with_tail,
)
from .verify import (
    CHARACTERIZED_PAIRS,
    CHARACTERIZED_SINGLE,
    TARGETS,
    VerdictRecord,
    WitnessRecord,
    characterized_sets,
    intersect_characterizations,
    maximality_sweep,
    mine_witness,
    verify_pair,
    verify_pattern_set,
    verify_single,
)
from .selftest import run_selftest

__version__ = "0.1.0"
