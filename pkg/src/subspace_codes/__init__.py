"""Exact bounds and constructions for subspace codes over finite fields.

Subspaces of GF(q)^n are compared under the subspace distance
dim(U + V) - dim(U ∩ V) and the injection distance
max(dim U, dim V) - dim(U ∩ V).  The package counts, bounds and builds
packing and covering codes under both metrics, and checks everything it can
against brute-force enumeration of small projective spaces.
"""

from .constructions import (
    Code,
    grassmann_union_code,
    greedy_cover,
    kk_code,
    layered_packing_code,
    trivial_covering_code,
)
from .covering import CoveringBoundReport, covering_bounds
from .field import FieldElement, FieldSpec, gf
from .packing import BoundInterval, RateQuery, asymptotic_rate, packing_bounds
from .qcomb import (
    ball_volume,
    distance_count,
    gaussian_binomial,
    n_injection,
    n_subspace,
    projective_space_size,
)
from .subspace import (
    AmbientSpace,
    Subspace,
    canonicalize,
    distance,
    injection_distance,
    puncture,
    subspace_distance,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "BoundInterval",
    "Code",
    "CoveringBoundReport",
    "FieldElement",
    "FieldSpec",
    "RateQuery",
    "Subspace",
    "asymptotic_rate",
    "ball_volume",
    "canonicalize",
    "covering_bounds",
    "distance",
    "distance_count",
    "gaussian_binomial",
    "gf",
    "grassmann_union_code",
    "greedy_cover",
    "injection_distance",
    "kk_code",
    "layered_packing_code",
    "n_injection",
    "n_subspace",
    "packing_bounds",
    "projective_space_size",
    "puncture",
    "subspace_distance",
    "trivial_covering_code",
]
