"""Left/right path lattices of plane graphs, with maximum flow on top."""

from .circulation import face_boundary_vector, face_potential, path_vector, restrict_to_subgraph
from .embed import GraphSpec, PlaneGraph, build_graph, dual, faces, format_path, parse_path
from .errors import PathLatticeError
from .flow import CapacityMap, maxflow_dual_sp, maxflow_generic, maxflow_uppermost, weighted_packing
from .formats import load_graph, parse_graph_text
from .lattice import Comparison, compare, join, lowermost_path, meet, uppermost_path

__all__ = [
    "CapacityMap",
    "Comparison",
    "GraphSpec",
    "PathLatticeError",
    "PlaneGraph",
    "build_graph",
    "compare",
    "dual",
    "face_boundary_vector",
    "face_potential",
    "faces",
    "format_path",
    "join",
    "load_graph",
    "lowermost_path",
    "maxflow_dual_sp",
    "maxflow_generic",
    "maxflow_uppermost",
    "meet",
    "parse_graph_text",
    "parse_path",
    "path_vector",
    "restrict_to_subgraph",
    "uppermost_path",
    "weighted_packing",
]
