"""First homology of finite simple graphs over GF(2), computed three ways
(cellular, edge-graph, cubical) with a benchmark harness comparing them."""

from .cellular import h1_cellular
from .cubical import h1_cubical
from .cycles import SimpleCycle, simple_four_cycles, triangles
from .edgegraph import h1_edge_graph
from .edgelist import format_edge_list, parse_edge_list
from .errors import (
    BenchDisagreementError,
    GraphParseError,
    InputDomainError,
    InternalConsistencyError,
)
from .generators import GenSpec, erdos_renyi, named
from .gf2 import GF2Matrix
from .graph import Edge, Graph, box_product, connected_components, from_edge_list

__all__ = [
    "BenchDisagreementError",
    "Edge",
    "GF2Matrix",
    "GenSpec",
    "Graph",
    "GraphParseError",
    "InputDomainError",
    "InternalConsistencyError",
    "SimpleCycle",
    "box_product",
    "connected_components",
    "erdos_renyi",
    "format_edge_list",
    "from_edge_list",
    "h1_cellular",
    "h1_cubical",
    "h1_edge_graph",
    "named",
    "parse_edge_list",
    "simple_four_cycles",
    "triangles",
]

__version__ = "0.1.0"
