"""Spectral radius of graph squares: exact and iterative radii, enumeration, claim checks."""

from .graph import (
    ACYCLIC,
    UNREACHABLE,
    Graph,
    GraphError,
    coalesce,
    degree_stats,
    diameter,
    distances,
    from_edges,
    g6_decode,
    g6_encode,
    girth,
    is_connected,
    power,
    relocate_branch,
    square,
)
from .spectral import (
    ConvergenceError,
    ExactRadius,
    SpectralResult,
    charpoly,
    check_eigen_equation,
    compare_radii,
    compare_radius,
    exact_radius,
    radius,
    spectral_radius,
    tilde,
)
from .iso import (
    automorphism_generators,
    canonical_form,
    canonical_labeling,
    contains_subgraph,
    is_isomorphic,
    minimal_forbidden,
)
from .enumeration import all_connected, all_trees, all_trees_with_diameter, all_unicyclic
from .verify import ClaimReport

__version__ = "0.1.0"

__all__ = [
    "ACYCLIC",
    "ClaimReport",
    "ConvergenceError",
    "ExactRadius",
    "Graph",
    "GraphError",
    "SpectralResult",
    "UNREACHABLE",
    "all_connected",
    "all_trees",
    "all_trees_with_diameter",
    "all_unicyclic",
    "automorphism_generators",
    "canonical_form",
    "canonical_labeling",
    "charpoly",
    "check_eigen_equation",
    "coalesce",
    "compare_radii",
    "compare_radius",
    "contains_subgraph",
    "degree_stats",
    "diameter",
    "distances",
    "exact_radius",
    "from_edges",
    "g6_decode",
    "g6_encode",
    "girth",
    "is_connected",
    "is_isomorphic",
    "minimal_forbidden",
    "power",
    "radius",
    "relocate_branch",
    "spectral_radius",
    "square",
    "tilde",
]
