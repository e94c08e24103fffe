"""Cycle spectra, consecutive cycle lengths, and desk-scale exhaustive
verification for small simple graphs."""

from .errors import ContradictionError, Graph6Error, GraphError, HypothesisError
from .graphs import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    contract,
    contraction_map,
    cycle_graph,
    disjoint_union,
    emit_graph6,
    empty_graph,
    induced_subgraph,
    join,
    named_graph,
    neighborhood,
    parse_graph6,
    path_graph,
    petersen,
    with_edge,
    without_edge,
)
from .structure import (
    BipartiteReport,
    BlockTree,
    ConnectivityReport,
    RootedGraph,
    articulation_points,
    block_cutvertex_tree,
    connected_components,
    connectivity_at_least,
    find_triangle,
    is_biconnected,
    is_bipartite,
    is_connected,
    is_triangle_free,
    rooted_is_2_connected,
    rooted_min_degree,
)
from .cycles import (
    ConsecutiveCycles,
    SpectrumReport,
    cycle_spectrum,
    find_cycle_of_length,
    find_nonseparating_induced_odd_cycle,
    has_k_consecutive,
    induced_odd_cycles,
    is_induced_cycle,
    is_non_separating,
    select_structured_odd_cycle,
    structured_pattern_ok,
    validate_cycle,
)
from .paths import (
    PathFamily,
    enumerate_xy_path_lengths,
    find_xy_path_of_length,
    is_good_triple,
    is_nice,
    qualifying_root_pairs,
    three_good_paths,
    trace_nice_path_search,
    two_nice_paths,
    validate_path,
)
from .consecutive import (
    ConsecutiveCyclesCertificate,
    KCyclesReport,
    construct_consecutive_cycles,
    find_bridging_index,
    verify_kcycles,
)
from .generate import all_graphs, canonical_form, graph_classes, isomorphic
from .campaign import CampaignReport, CampaignSpec, run_campaign

__version__ = "0.1.0"
