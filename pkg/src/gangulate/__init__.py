"""Forbidden-edge g-angulations of convex complete graphs.

Exact counting and search, recognizers for the minimal blocking families,
a constructive decision procedure and placements of abstract graphs.
"""

__version__ = "0.1.0"

from .configs import (
    AlphaPair,
    ForbiddingClass,
    classify_forbidding,
    detect_alpha_pairs,
    g_angulable_vertices,
    generate_f_stars,
    is_f_star,
    is_g_angulable_vertex,
    is_j_star,
)
from .convex import (
    Edge,
    GAngulation,
    Instance,
    admissible_params,
    canonical_form,
    cyclic_gap,
    edge,
    edges_cross,
    is_boundary_edge,
    load_instance,
    parse_instance,
    short_diagonal,
)
from .cubic import CubicLabeling, check_labeling_4, cubic_graphs, label_cubic, place_cubic, reduce_cubic
from .decide import Decision, construct_small, decide, find_short_diagonal
from .errors import (
    BoundaryEdgeError,
    GangulateError,
    InadmissibleParams,
    NoneFound,
    NotPotentiallyAngulable,
    OutOfRange,
    ParseError,
    PlacementValidationError,
    PreconditionError,
    SizeCapExceeded,
)
from .oracle import (
    BlockingOracle,
    count_gangulations,
    enumerate_gangulations,
    exists_gangulation,
    find_gangulation,
    solve,
    validate_gangulation,
)
from .placement import (
    AbstractGraph,
    Placement,
    disjoint_cycles,
    generalized_petersen,
    load_graph,
    parse_graph,
    place_cycle,
    place_petersen,
    place_two_regular,
    search_placement,
)
from .render import render_svg
