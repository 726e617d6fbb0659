"""Digital topology on integer lattices and digital manifold classification."""

from .analysis import (
    LatticeFunction,
    LinearOrder,
    PartitionCandidate,
    PartitionReport,
    connected_ray_orders,
    count_orientations_0,
    euler_characteristic,
    orientations_0,
    ramp_partition,
    support,
    support_algebra_check,
    support_pullback_check,
    verify_partition_of_unity,
)
from .lattice import (
    Adjacency,
    AdjacencyGraph,
    DigitalImage,
    SimplexCensus,
    adjacent,
    components,
    gen_box,
    gen_cross,
    gen_interval,
    gen_sphere,
    is_connected,
    is_totally_disconnected,
    neighborhood,
    neighborhood_star,
    np_adjacent,
    product,
    remove_points,
    simplex_census,
)
from .manifold import (
    ManifoldReport,
    PointMatch,
    check_dimension,
    classify_point,
    is_submanifold,
    manifold_report,
    sweep,
)
from .models import ModelClass, enumerate_model_classes, model_neighborhood
from .morphisms import (
    DigitalMap,
    HomotopyTable,
    find_isomorphism,
    is_continuous,
    is_embedding,
    is_isomorphism,
    verify_homotopy,
)

__version__ = "0.1.0"
