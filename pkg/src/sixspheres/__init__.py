"""({1,2,3},6)-spheres: enumeration, Goldberg-Coxeter construction,
zigzags and central circuits, and point-group symmetry."""

from .map_core import PlanarMap, build_map, canonical_code, from_rotation, is_isomorphic
from .named_graphs import named_graph
from .symmetry import point_group

__all__ = ["PlanarMap", "build_map", "canonical_code", "from_rotation",
           "is_isomorphic", "named_graph", "point_group"]
__version__ = "0.1.0"
