"""Exact computation for tau-critical hypergraphs, their complements, and
the extremal order function v_max(r, t)."""
from .hypercore import (Hypergraph, HypergraphError, ParseError, canonical_form, complement,
                        delete_edge, delete_vertex, isolated_vertices, parse, serialize,
                        spanned_subhypergraph)
from .solvers import (SolveResult, clique_number, enumerate_max_cliques, enumerate_min_transversals,
                      independence_number, transversal_number)
from .criticality import (check_observation2, extract_tau_critical, is_tau_critical,
                          is_vertex_critical, is_witness)
from .duality import critical_to_witness, gallai_check, round_trip_check, witness_to_critical
from .arrow import CliqueFamily, generate, verify_negative_arrow
from .extremal import bounds, search_v_max, verify_certificate

__all__ = [
    "Hypergraph", "HypergraphError", "ParseError", "canonical_form", "complement", "delete_edge",
    "delete_vertex", "isolated_vertices", "parse", "serialize", "spanned_subhypergraph",
    "SolveResult", "clique_number", "enumerate_max_cliques", "enumerate_min_transversals",
    "independence_number", "transversal_number",
    "check_observation2", "extract_tau_critical", "is_tau_critical", "is_vertex_critical", "is_witness",
    "critical_to_witness", "gallai_check", "round_trip_check", "witness_to_critical",
    "CliqueFamily", "generate", "verify_negative_arrow",
    "bounds", "search_v_max", "verify_certificate",
]

__version__ = "0.1.0"
