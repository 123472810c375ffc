"""Spectral extremal graph laboratory for odd-wheel-free graphs."""

from oddwheel.graphs import (
    Component,
    DegreeClassification,
    Graph,
    GraphError,
    build_graph,
    classify_degrees,
    complement,
    components,
    disjoint_union,
    is_connected,
    join,
)
from oddwheel.families import (
    CandidateSpec,
    FamilySpec,
    auto_left_sizes,
    bipartite_candidate,
    core_component,
    enumerate_family,
    matching_embedded_candidate,
    odd_wheel,
    primitive,
    spex_candidate,
    standard_member,
)
from oddwheel.detect import (
    contains_cycle_of_length,
    contains_odd_wheel,
    is_star_free,
    longest_path_order,
)
from oddwheel.enumerate import (
    BudgetExceededError,
    all_graphs,
    connected_with_degrees,
    graph_code,
)
from oddwheel.spectral import (
    CharPoly,
    QuotientSystem,
    SpectralError,
    SpectralResult,
    char_poly,
    claim1_comparison,
    matrix_radius,
    quotient,
    spectral_radius,
)
from oddwheel.walks import (
    OrderResult,
    Relation,
    WalkProfile,
    closed_form_profile,
    ex_infinity,
    ex_infinity_trace,
    extract_deficient_structure,
    vertex_walks,
    walk_compare,
    walk_profile,
)
from oddwheel.formats import (
    FormatError,
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
)
from oddwheel.verify import VerificationReport, run_claim

__version__ = "0.1.0"
