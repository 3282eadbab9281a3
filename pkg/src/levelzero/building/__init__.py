from .lattice import LatticeClass, canonicalize, standard_vertex
from .position import (RelativePosition, relative_position, distance,
                       adjacent, adapted_frame, vertex_at,
                       smith_valuations)
from .complexes import (Simplex, ConvexComplex, enclos, tight_path,
                        enumerate_tight_paths, ball, convex_hull,
                        complex_from_vertices, is_simplex, residue_flag,
                        common_enclos_neighbor, BudgetExceeded)
from . import serialize

__all__ = [
    "LatticeClass", "canonicalize", "standard_vertex",
    "RelativePosition", "relative_position", "distance", "adjacent",
    "adapted_frame", "vertex_at", "smith_valuations",
    "Simplex", "ConvexComplex", "enclos", "tight_path",
    "enumerate_tight_paths", "ball", "convex_hull",
    "complex_from_vertices", "is_simplex", "residue_flag",
    "common_enclos_neighbor", "BudgetExceeded", "serialize",
]
