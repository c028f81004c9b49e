"""Exact-rational toolkit for binarizations of bounded integer variables,
binary extended formulations, sequential convexification and ranks."""

from .bef import (
    ExtendedFormulation,
    Fixing,
    build,
    characterize_projection,
    check_persistency,
    lpr,
    sequential_convexify,
    verify_vertex_conditions,
    vertices_Q,
)
from .binarization import (
    Binarization,
    BitString,
    HypercubePerm,
    classify,
    make_custom,
    make_full,
    make_hypercube,
    make_log,
    make_trunc_log,
    make_unary,
)
from .geometry import (
    Face,
    HPolytope,
    SkeletonGraph,
    VPolytope,
    convexify_binary,
    enumerate_vertices,
    facet_hull,
    minimal_face,
    skeleton,
    slice,
)
from .rank import (
    alpha_edges,
    hypercube_rank,
    property_rank,
    rank_direct,
    rank_full_formula,
    rank_log_formula,
    rank_skeleton,
    rank_trunc,
    rank_unary_formula,
    verify_logbest,
)
from .setcover import SetCoverInstance, set_cover_min

__version__ = "0.1.0"
