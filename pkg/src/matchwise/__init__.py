"""Exact computation and bound checking for matching size Ramsey numbers."""

from .arrowing import (ArrowVerdict, Budget, Color, Coloring, arrows, arrows_bipartite_cover,
                       arrows_generic, arrows_matching, check_certificate)
from .bounds import (AsymptoticParams, BoundReport, FamilySpec, RatioSequence, base_value,
                     bundle_two_sided, core_growth_envelope, disjoint_upper, family_for_alpha,
                     krss_bound, matching_lower, ratio_envelope, self_ramsey_upper)
from .constructions import (BundleParams, Embedding, UtParams, build_bundle, build_ut, bundle_stats,
                            embed_bundle_after_deletion, pad_with_isolates)
from .errors import BudgetExhausted, CapError, GraphError, NotBipartiteError
from .graph import (Edge, Graph, GraphStats, bipartition, build_from_edges, canonical_code,
                    contains_subgraph, delete_vertices, disjoint_union, generate, graph6_decode,
                    graph6_encode, isolate_free_core, stats)
from .matching import has_matching_at_least, matching_number, min_vertex_cover_bipartite
from .solver import (SolveResult, SolverCaps, enumerate_hosts, exact_generic_size_ramsey,
                     exact_matching_size_ramsey)

__version__ = "0.1.0"

__all__ = [
    "ArrowVerdict",
    "Budget",
    "Color",
    "Coloring",
    "arrows",
    "arrows_bipartite_cover",
    "arrows_generic",
    "arrows_matching",
    "check_certificate",
    "AsymptoticParams",
    "BoundReport",
    "FamilySpec",
    "RatioSequence",
    "base_value",
    "bundle_two_sided",
    "core_growth_envelope",
    "disjoint_upper",
    "family_for_alpha",
    "krss_bound",
    "matching_lower",
    "ratio_envelope",
    "self_ramsey_upper",
    "BundleParams",
    "Embedding",
    "UtParams",
    "build_bundle",
    "build_ut",
    "bundle_stats",
    "embed_bundle_after_deletion",
    "pad_with_isolates",
    "BudgetExhausted",
    "CapError",
    "GraphError",
    "NotBipartiteError",
    "Edge",
    "Graph",
    "GraphStats",
    "bipartition",
    "build_from_edges",
    "canonical_code",
    "contains_subgraph",
    "delete_vertices",
    "disjoint_union",
    "generate",
    "graph6_decode",
    "graph6_encode",
    "isolate_free_core",
    "stats",
    "has_matching_at_least",
    "matching_number",
    "min_vertex_cover_bipartite",
    "SolveResult",
    "SolverCaps",
    "enumerate_hosts",
    "exact_generic_size_ramsey",
    "exact_matching_size_ramsey",
]
