"""Revlex-initial 0/1-polytopes: conv{0, ..., n-1} with vertices read as binary numbers."""

from .core import BitVector01, Signature, from_index, rlex_less, signature_of, to_index
from .polytope import RevlexPolytope, block_of, dimension, make_polytope, maximize
from .facets import LinearInequality, facet_count, full_description, minimal_description
from .graph import PolytopeGraph, average_degree, build_graph, edge_count_formula, neighbors
from .expansion import ExpansionCertificate, FlowAssignment, build_mcf, certify_expansion
from .bounds import (
    pyramid_edge_count,
    pyramid_expansion_certificate,
    pyramid_facet_count,
    pyramid_params,
)

__version__ = "0.1.0"
