"""Exact total dominator coloring of simple graphs and of graph operations."""

from .coloring import Coloring, TDCertificate, is_proper, is_td_coloring, verify_certificate
from .families import FamilySpec, build_family
from .graph import (
    Graph,
    contract_edge,
    contract_vertex,
    corona,
    join,
    odot,
    remove_edge,
    remove_vertex,
    structural_predicates,
)
from .enumeration import enumerate_connected_graphs, is_isomorphic
from .solver import (
    SolveResult,
    chromatic_number,
    td_chromatic_number,
    td_chromatic_oracle,
    total_domination_number,
)

__all__ = [
    "Coloring",
    "FamilySpec",
    "Graph",
    "SolveResult",
    "TDCertificate",
    "build_family",
    "chromatic_number",
    "contract_edge",
    "contract_vertex",
    "corona",
    "enumerate_connected_graphs",
    "is_isomorphic",
    "is_proper",
    "is_td_coloring",
    "join",
    "odot",
    "remove_edge",
    "remove_vertex",
    "structural_predicates",
    "td_chromatic_number",
    "td_chromatic_oracle",
    "total_domination_number",
    "verify_certificate",
]
__version__ = "0.1.0"
