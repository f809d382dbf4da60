"""Connectivity toolkit for the disjointness graph D(P) of the segments
spanned by a planar point set in general position.

The library builds D(P) exactly, computes degrees / distances / vertex
connectivity via unit-capacity max-flow, evaluates the closed-form bound
kappa(n), and constructs certified collections of at least kappa(n) pairwise
internally disjoint a-b paths for any pair at distance 2.
"""

from .bounds import (
    QuadrantCounts,
    balanced_split_is_minimum,
    choose2,
    delta2_formula,
    delta3_formula,
    eta3_formula,
    kappa,
    kappa_difference,
    size_A_formula,
    size_B_formula,
)
from .construct import (
    ExtensionScene,
    PathCollection,
    ProjectionScene,
    build_case1,
    build_case2,
    build_case3,
    build_extension,
    build_projection,
    collection_to_json,
    construct_menger_paths,
    is_ordered,
    max_short_collection,
    verify_collection,
)
from .frame import (
    NeighborhoodPartition,
    PsiDomain,
    QuadrantFrame,
    build_frame,
    enumerate_frames,
    expected_block_sizes,
    iota_set,
    partition_neighbors,
    psi,
    psi_domain,
    segments_large,
)
from .generators import gen_convex, gen_double_chain, gen_random, generate
from .geometry import (
    CROSSING,
    DISJOINT,
    SHARED_ENDPOINT,
    Intersection,
    Point,
    PointSet,
    check_general_position,
    hull_points,
    intersection_kind,
    orientation,
    radial_order,
    seg,
    validate_general_position,
)
from .graph import (
    BitGraph,
    DisjointnessGraph,
    build_graph,
    connectivity_via_distance2,
    degree_stats,
    distance,
    graph_to_json,
    max_disjoint_paths,
    vertex_connectivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
