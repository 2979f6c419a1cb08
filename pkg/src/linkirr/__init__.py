"""Link-irregular graphs: canonical forms, isomorph-free enumeration,
link analysis, planarity certificates and exact bounds."""

from __future__ import annotations

from .graph import Graph, GraphError, build, complement, girth, induced_subgraph, is_bipartite, regularity
from .isomorphism import CanonicalForm, are_isomorphic, canonical_form, isomorphism
from .kernels import BACKEND
from .links import Verdict, Witness, is_link_irregular, link, link_degree_table, verdict_explain
from .enumeration import GenSpec, SearchResult, enumerate_graphs, enumerate_regular, search_link_irregular
from .planarity import PlanarityResult, is_planar, is_triangulation
from .formats import parse_edge_list, parse_graph6, write_graph6
from .datasets import builtin

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CanonicalForm",
    "GenSpec",
    "Graph",
    "GraphError",
    "PlanarityResult",
    "SearchResult",
    "Verdict",
    "Witness",
    "are_isomorphic",
    "build",
    "builtin",
    "canonical_form",
    "complement",
    "enumerate_graphs",
    "enumerate_regular",
    "girth",
    "induced_subgraph",
    "is_bipartite",
    "is_link_irregular",
    "is_planar",
    "is_triangulation",
    "isomorphism",
    "link",
    "link_degree_table",
    "parse_edge_list",
    "parse_graph6",
    "regularity",
    "search_link_irregular",
    "verdict_explain",
    "write_graph6",
]
