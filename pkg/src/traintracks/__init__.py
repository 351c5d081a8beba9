"""traintracks: recognize distance-hereditary graphs and draw them as
planar train-track diagrams on orthogonal, hexagonal, and radial grids."""

from .graph import (
    Graph,
    GraphParseError,
    ExtensionStep,
    ExtensionTrace,
    parse_graph,
    graph_equals,
    graph_to_edge_text,
    graph_to_dict,
    gen_dh_random,
    gen_gnp,
    distances_bfs,
    replay_trace,
)
from .recognize import (
    EliminationStep,
    EliminationSequence,
    NotDistanceHereditary,
    Disconnected,
    TooSmall,
    TooLarge,
    SequenceError,
    eliminate,
    is_distance_hereditary_oracle,
    apply_sequence_forward,
    max_dh_subgraph_bruteforce,
    trace_to_sequence,
    sequence_to_text,
)
from .tree import (
    DeltaTree,
    Junction,
    TreeError,
    DELTA,
    LAMBDA,
    build_delta_tree,
    semantics,
    tree_to_sequence,
    validate_tree,
    balanced_clique_tree,
    tree_to_text,
    tree_from_text,
)
from .ortho import (
    RootedBinaryTree,
    OrthoLayout,
    root_at_leaf,
    layout_upward_ortho,
    check_ortho_valid,
    ortho_area,
    ortho_to_text,
    ortho_from_text,
)
from .hexgrid import (
    HexPoint,
    HexLayout,
    Run,
    UnresolvableOverlap,
    ortho_to_hex,
    expand_run,
    expand_all,
    resolve_overlaps,
    check_hex_valid,
    count_bends,
    hex_area,
    descriptor_field_count,
    hex_to_text,
    hex_from_text,
)
from .radial import (
    RadialLayout,
    layout_radial_trident,
    max_shrink_ratio,
    radial_crossings,
)
from .render import (
    RenderOptions,
    RenderError,
    render_svg,
    track_geometry,
    check_smoothness,
    sample_permitted_paths,
    svg_sampled_paths,
)

__version__ = "0.1.0"
