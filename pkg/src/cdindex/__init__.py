"""Flag invariants of graded posets: ab- and cd-indices, local and mixed
cd-indices of subdivisions, and the h-side polynomials they determine."""

from .ncpoly import NCPoly, format_poly, parse
from .poset import Poset, add_top, boundary, interval, is_eulerian, is_near_eulerian, semisuspension
from .posetmap import CutSpec, PosetMap, build_map, cut, is_sfs
from .constructions import barycentric, boolean, carrier_map, cube_lattice, polygon, simplicial_face_poset
from .indices import ab_index, cd_index, local_cd_index, mixed_cd_index
from .hpoly import CommPoly, format_comm, g_poly, h_poly, local_h_poly, mixed_h_poly

__version__ = "0.1.0"

__all__ = [
    "NCPoly", "format_poly", "parse",
    "Poset", "add_top", "boundary", "interval", "is_eulerian", "is_near_eulerian", "semisuspension",
    "CutSpec", "PosetMap", "build_map", "cut", "is_sfs",
    "barycentric", "boolean", "carrier_map", "cube_lattice", "polygon", "simplicial_face_poset",
    "ab_index", "cd_index", "local_cd_index", "mixed_cd_index",
    "CommPoly", "format_comm", "g_poly", "h_poly", "local_h_poly", "mixed_h_poly",
]
