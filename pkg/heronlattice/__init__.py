"""Exact lattice embeddings of Heronian triangles and tetrahedra.

Rational axial poses are rotated onto Z2 and Z3 with Gaussian and quaternion
GCDs; embeddings are compared through canonical forms and can be enumerated
exhaustively.
"""

from .canonical import (
    CanonicalEmbedding,
    is_axial_embedding,
    normalize_translation,
    strong_canonical,
    weak_canonical,
)
from .census import enumerate_heronian, run_census
from .config import ConfigValidationError, Settings, load_settings
from .embed import (
    EmbeddingError,
    LatticeEmbedding,
    embed_step_z3,
    embed_tetra_z3,
    embed_triangle_via_z3,
    embed_triangle_z2,
    gcd_embedding_family,
    rotate_point_z3,
    verify_embedding,
)
from .errors import DomainError
from .gaussian import GaussInt, gauss_gcd, gauss_mod
from .pose import AxialPose, axial_pose, axial_pose_triangle, check_denominators_1mod4
from .quaternion import GCDAbortError, Quat, quat_gcd, quat_mod, quat_mul, quat_round
from .search import (
    BudgetExhausted,
    PentatopeSpec,
    exhaustive_embeddings,
    exhaustive_triangle_embeddings,
    rotor_from_face_pair,
    search_z4,
    solve_three_squares,
)
from .simplex import (
    EdgeHexad,
    EdgeTriple,
    SymmetryClass,
    canonical_hexad,
    classify_symmetry,
    cm_area_sq,
    cm_volume_det,
    cot_half_angle,
    hero_area_sq16,
    is_heronian,
    parse_permutation,
)

__all__ = [
    "AxialPose",
    "BudgetExhausted",
    "CanonicalEmbedding",
    "ConfigValidationError",
    "DomainError",
    "EdgeHexad",
    "EdgeTriple",
    "EmbeddingError",
    "GCDAbortError",
    "GaussInt",
    "LatticeEmbedding",
    "PentatopeSpec",
    "Quat",
    "Settings",
    "SymmetryClass",
    "axial_pose",
    "axial_pose_triangle",
    "canonical_hexad",
    "check_denominators_1mod4",
    "classify_symmetry",
    "cm_area_sq",
    "cm_volume_det",
    "cot_half_angle",
    "embed_step_z3",
    "embed_tetra_z3",
    "embed_triangle_via_z3",
    "embed_triangle_z2",
    "enumerate_heronian",
    "exhaustive_embeddings",
    "exhaustive_triangle_embeddings",
    "gauss_gcd",
    "gauss_mod",
    "gcd_embedding_family",
    "hero_area_sq16",
    "is_axial_embedding",
    "is_heronian",
    "load_settings",
    "normalize_translation",
    "parse_permutation",
    "quat_gcd",
    "quat_mod",
    "quat_mul",
    "quat_round",
    "rotate_point_z3",
    "rotor_from_face_pair",
    "run_census",
    "search_z4",
    "solve_three_squares",
    "strong_canonical",
    "verify_embedding",
    "weak_canonical",
]
