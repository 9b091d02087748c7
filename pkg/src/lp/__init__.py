"""Exact linear programming and polyhedral cones over Q."""

from .simplex import LPResult, LPStatus, SimplexSolver, lp_solve
from .cone import (
    Cone,
    FaceEnumerator,
    canonicalize,
    cone_dimension,
    extreme_rays,
    faces_all,
    homogeneity_space,
    lineality_space,
    relative_interior_point,
    strictly_feasible,
)

__all__ = [
    "LPResult",
    "LPStatus",
    "SimplexSolver",
    "lp_solve",
    "Cone",
    "FaceEnumerator",
    "canonicalize",
    "cone_dimension",
    "extreme_rays",
    "faces_all",
    "homogeneity_space",
    "lineality_space",
    "relative_interior_point",
    "strictly_feasible",
]
