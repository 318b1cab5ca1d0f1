"""Empty equilateral-triangle graphs (G_down, G_up, Theta6) and their matchings."""
from ._accel import NUMBA_ENABLED
from .geometry import ExactScalar, GeneralPositionError, Point, PointSet, general_position
from .graphs import (
    SimpleGraph,
    TriGraph,
    build,
    build_cone_minimum,
    build_oracle,
    hexagon_growth_tree,
    intersect_graph,
    union_graph,
)
from .matching import Matching, brute_force_matching, check_nishizeki, check_theorem2, max_matching
from .generators import random_general_position, reflect_x, three_connected_family, tight_family
from .augment import augment, verify_augmented

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "ExactScalar",
    "GeneralPositionError",
    "Point",
    "PointSet",
    "general_position",
    "SimpleGraph",
    "TriGraph",
    "build",
    "build_cone_minimum",
    "build_oracle",
    "hexagon_growth_tree",
    "intersect_graph",
    "union_graph",
    "Matching",
    "brute_force_matching",
    "check_nishizeki",
    "check_theorem2",
    "max_matching",
    "random_general_position",
    "reflect_x",
    "three_connected_family",
    "tight_family",
    "augment",
    "verify_augmented",
]
