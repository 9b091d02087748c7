"""Gröbner fan engine: cones, flips, traversals and fan summaries."""

from .facets import (
    FacetNormal,
    cone_of,
    facet_normals,
    raw_inequalities,
    restrict_initial_forms,
    verify_basis,
)
from .flip import flip
from .search import reverse_search, search_edge, walk_to_sink
from .symmetry import PermutationGroup, apply_permutation, check_permutation, validate_symmetry
from .summary import (
    FanSummary,
    degree_bounds,
    euler_characteristic,
    f_vector,
    homogeneity_dimension,
    summarize,
    universal_basis,
)
from .traversal import (
    bfs_enumerate,
    expand_orbits,
    iter_bfs,
    iter_symmetric_bfs,
    orbit_representative,
    symmetric_bfs,
)

__all__ = [
    "FacetNormal",
    "cone_of",
    "facet_normals",
    "raw_inequalities",
    "restrict_initial_forms",
    "verify_basis",
    "flip",
    "reverse_search",
    "search_edge",
    "walk_to_sink",
    "PermutationGroup",
    "apply_permutation",
    "check_permutation",
    "validate_symmetry",
    "FanSummary",
    "degree_bounds",
    "euler_characteristic",
    "f_vector",
    "homogeneity_dimension",
    "summarize",
    "universal_basis",
    "bfs_enumerate",
    "expand_orbits",
    "iter_bfs",
    "iter_symmetric_bfs",
    "orbit_representative",
    "symmetric_bfs",
]
