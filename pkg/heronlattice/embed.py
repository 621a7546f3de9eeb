"""Lattice embeddings by Gaussian and quaternion GCD rotations.

A rational pose is moved onto the integer lattice one rational vertex at a
time: with ``s`` the LCD of vertex ``S`` (as a primitive ``[s, ...]``), the
rotor ``X = GCD_L(S, s)`` has norm ``s`` and ``conj(X) * P * X`` carries every
lattice point and ``S`` itself to lattice points.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .canonical import CanonicalEmbedding, Strength, strong_canonical, weak_canonical
from .errors import DomainError
from .exact import primitive_reduce
from .gaussian import GaussInt, gauss_gcd
from .pose import axial_pose, axial_pose_triangle, conormalized_distance
from .quaternion import Quat, quat_gcd
from .simplex import (
    EdgeHexad,
    EdgeTriple,
    Permutation,
    all_permutations,
    format_permutation,
)

logger = logging.getLogger(__name__)

MAX_GCD_FORMS = 4


class EmbeddingError(DomainError):
    """Raised when a construction fails to land on the lattice."""


class EvenDenominatorError(EmbeddingError):
    """Raised when a vertex LCD is even; the left GCD need not be unique."""


@dataclass(frozen=True)
class LatticeEmbedding:
    """Integer vertices ``[1, x, y, z]`` of an embedded triangle or tetrahedron.

    Vertex ``i`` is source vertex ``permutation[i]``; ``rotors`` is the chain
    of rotations applied to the axial pose, in order.
    """

    vertices: tuple[Quat, ...]
    source: EdgeTriple | EdgeHexad
    permutation: Permutation
    rotors: tuple[Quat, ...] = ()

    @property
    def dimension(self) -> int:
        return 2 if isinstance(self.source, EdgeTriple) else 3

    @property
    def labels(self) -> Permutation:
        return self.permutation

    def points(self) -> tuple[tuple[int, ...], ...]:
        return tuple(v.vector[: self.dimension] for v in self.vertices)

    def to_text(self) -> str:
        return "\n".join(str(v) for v in self.vertices)


def rotate_point_z3(x: Quat, p: Quat) -> Quat:
    """Primitive form of ``conj(x) * p * x``."""
    if x.is_zero:
        raise ValueError("zero rotor")
    return Quat.of(primitive_reduce(list(x.conj() * p * x)))


def _pairwise(points: Sequence[Quat]) -> list:
    return [
        conormalized_distance(points[a], points[b])
        for a in range(len(points))
        for b in range(a)
    ]


def embed_step_z3(points: Sequence[Quat], target: int) -> tuple[list[Quat], Quat]:
    """Rotate so that ``points[target]`` lands on the lattice.

    Every point before the target must already be a lattice point; later
    points may stay rational. Returns the rotated points and the rotor used
    (``1`` when nothing had to move).

    Raises
    ------
    EvenDenominatorError
        If the LCD of the target is even.
    EmbeddingError
        If the GCD has the wrong norm or a rotated point is not integral.
    """
    points = list(points)
    pivot = points[target]
    for index, point in enumerate(points):
        if index < target and point.s != 1:
            raise EmbeddingError(f"vertex {index} is not a lattice point: {point}")
    scalar = pivot.s
    if scalar == 1:
        return points, Quat(1)
    if scalar % 2 == 0:
        raise EvenDenominatorError(
            f"even LCD {scalar}: GCD uniqueness not guaranteed for {pivot}"
        )
    rotor = quat_gcd(pivot, Quat(scalar), "left")
    if rotor.norm() != scalar:
        raise EmbeddingError(
            f"GCD {rotor} of {pivot} has norm {rotor.norm()}, expected {scalar}"
        )
    rotated = [rotate_point_z3(rotor, p) for p in points]
    stray = [p for p in rotated[: target + 1] if p.s != 1]
    if stray:
        raise EmbeddingError(f"rotor {rotor} left non-lattice points {stray}")
    if _pairwise(rotated) != _pairwise(points):
        raise EmbeddingError(f"rotor {rotor} did not preserve distances")
    logger.debug("vertex %d with LCD %d embedded by rotor %s", target, scalar, rotor)
    return rotated, rotor


def embed_points_z3(points: Sequence[Quat]) -> tuple[list[Quat], tuple[Quat, ...]]:
    """Embed rational points with integer squared distances into Z3.

    The first point is translated to the origin, then each remaining
    non-lattice point is embedded in turn.
    """
    if not points:
        return [], ()
    origin = points[0]
    shifted = [_translate(p, origin) for p in points]
    rotors = []
    for index in range(1, len(shifted)):
        if shifted[index].s != 1:
            shifted, rotor = embed_step_z3(shifted, index)
            rotors.append(rotor)
    return shifted, tuple(rotors)


def _translate(p: Quat, origin: Quat) -> Quat:
    lcm_scalar = p.s * origin.s
    return Quat.of(
        primitive_reduce(
            [lcm_scalar]
            + [a * origin.s - b * p.s for a, b in zip(p.vector, origin.vector)]
        )
    )


def verify_embedding(e: LatticeEmbedding) -> bool:
    """Whether every vertex is a lattice point at the prescribed distances."""
    posed = e.source.permuted(e.permutation)
    if len(e.vertices) != posed.vertex_count:
        return False
    if any(v.s != 1 for v in e.vertices):
        return False
    if e.dimension == 2 and any(v.r != 0 for v in e.vertices):
        return False
    return all(
        conormalized_distance(e.vertices[a], e.vertices[b]) == posed.squared(a, b)
        for a in range(len(e.vertices))
        for b in range(a)
    )


def embed_tetra_z3(h: EdgeHexad, perm: Permutation | None = None) -> LatticeEmbedding:
    """Embed a Heronian tetrahedron into Z3 from its axial pose under ``perm``."""
    pose = axial_pose(h, perm)
    points, rotors = embed_points_z3(pose.vertices)
    embedding = LatticeEmbedding(tuple(points), h, pose.permutation, rotors)
    if not verify_embedding(embedding):
        raise EmbeddingError(f"embedding of {h} failed verification")
    logger.info(
        "embedded %s under %s with %d rotor(s)",
        h,
        format_permutation(pose.permutation),
        len(rotors),
    )
    return embedding


def _exact_div(z: GaussInt, d: int) -> GaussInt:
    if z.re % d or z.im % d:
        raise EmbeddingError(f"{z} is not divisible by {d}")
    return GaussInt(z.re // d, z.im // d)


def embed_triangle_z2(t: EdgeTriple, perm: Permutation | None = None) -> LatticeEmbedding:
    """Embed a Heronian triangle into Z2 with a Gaussian GCD.

    With ``R = R''/r`` the rational vertex, ``X = gcd(R'', r)`` has norm ``r``
    and ``P -> conj(X)**2 * P / r`` is a rotation taking every vertex into Z[i].
    """
    pose = axial_pose_triangle(t, perm)
    _, q, rv = pose.vertices
    r = rv.s
    numerator = GaussInt(rv.p, rv.q)
    rotor = gauss_gcd(numerator, r)
    if rotor.norm() != r:
        raise EmbeddingError(f"Gaussian GCD {rotor} has norm {rotor.norm()}, expected {r}")
    turn = rotor.conj() * rotor.conj()
    images = (
        GaussInt(0, 0),
        _exact_div(turn * GaussInt(q.p, q.q), r),
        _exact_div(turn * numerator, r * r),
    )
    vertices = tuple(Quat(1, z.re, z.im, 0) for z in images)
    rotors = () if r == 1 else (Quat(rotor.re, 0, 0, rotor.im),)
    embedding = LatticeEmbedding(vertices, t, pose.permutation, rotors)
    if not verify_embedding(embedding):
        raise EmbeddingError(f"embedding of {t} failed verification")
    return embedding


def embed_triangle_via_z3(t: EdgeTriple, perm: Permutation | None = None) -> LatticeEmbedding:
    """Embed a Heronian triangle using the quaternion construction in the k=0 plane."""
    pose = axial_pose_triangle(t, perm)
    points, rotors = embed_points_z3(pose.vertices)
    if any(p.r != 0 for p in points):
        raise EmbeddingError(f"rotors {rotors} left the plane for {t}")
    embedding = LatticeEmbedding(tuple(points), t, pose.permutation, rotors)
    if not verify_embedding(embedding):
        raise EmbeddingError(f"embedding of {t} failed verification")
    return embedding


def _family_member(task: tuple[EdgeHexad, Permutation, str]) -> CanonicalEmbedding:
    h, perm, strength = task
    embedding = embed_tetra_z3(h, perm)
    return weak_canonical(embedding) if strength == "weak" else strong_canonical(embedding)


def gcd_embedding_family(
    h: EdgeHexad, strength: Strength = "strong", jobs: int = 1
) -> tuple[CanonicalEmbedding, ...]:
    """Distinct canonical GCD embeddings over all 24 vertex permutations."""
    tasks = [(h, perm, strength) for perm in all_permutations(4)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            forms = set(pool.map(_family_member, tasks))
    else:
        forms = {_family_member(task) for task in tasks}
    result = tuple(sorted(forms))
    strong_count = len({form.vertices for form in result})
    if strong_count > MAX_GCD_FORMS:
        raise EmbeddingError(
            f"{h} produced {strong_count} strong GCD forms, more than {MAX_GCD_FORMS}"
        )
    logger.info("GCD family of %s: %d %s form(s)", h, len(result), strength)
    return result
