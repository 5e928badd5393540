"""Exact chamber decompositions for Cox-ring presentations.

Computes GIT (Mori) chamber decompositions and stable-base-locus
decompositions of effective cones, plus the rank-two coincidence criteria,
entirely in exact rational arithmetic.
"""

from .cones import Arrangement, Cone, arrangement_cells, cone_from_halfspaces, cone_from_rays, intersect
from .intlinalg import gale_dual

__all__ = [
    "Arrangement",
    "Cone",
    "arrangement_cells",
    "cone_from_halfspaces",
    "cone_from_rays",
    "gale_dual",
    "intersect",
]

__version__ = "0.1.0"
