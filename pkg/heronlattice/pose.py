"""Axial rational poses of Heronian triangles and tetrahedra."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .exact import primitive_reduce, rat_sqrt
from .quaternion import Quat
from .simplex import (
    EdgeHexad,
    EdgeTriple,
    ImproperSimplexError,
    NotHeronianError,
    Permutation,
    all_permutations,
    cm_volume_det,
    format_permutation,
    hero_area_sq16,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxialPose:
    """Vertices placed with P at the origin, Q on the i-axis and R in the i-j plane.

    Attributes
    ----------
    vertices
        Primitive projective points ``[s, p, q, r]``; the scalar is the LCD.
    edges
        The source edges, before the permutation is applied.
    permutation
        Vertex permutation applied to ``edges`` before posing.
    """

    vertices: tuple[Quat, ...]
    edges: EdgeTriple | EdgeHexad
    permutation: Permutation

    @property
    def posed_edges(self) -> EdgeTriple | EdgeHexad:
        return self.edges.permuted(self.permutation)

    @property
    def scalars(self) -> tuple[int, ...]:
        return tuple(v.s for v in self.vertices)

    def to_text(self) -> str:
        return "\n".join(str(v) for v in self.vertices)


def coordinates(point: Quat) -> tuple[Fraction, ...]:
    """Cartesian coordinates of a projective point."""
    return tuple(Fraction(c, point.s) for c in point.vector)


def conormalized_distance(a: Quat, b: Quat) -> Fraction:
    """Squared Euclidean distance between two projective points."""
    return sum(((x - y) ** 2 for x, y in zip(coordinates(a), coordinates(b))), Fraction(0))


def _point(*coords: Fraction | int) -> Quat:
    return Quat.of(primitive_reduce([1, *coords]))


def _face_area(t: EdgeTriple) -> Fraction:
    root = rat_sqrt(Fraction(hero_area_sq16(t), 16))
    if root is None:
        raise NotHeronianError(f"not Heronian: face {t} has irrational area")
    return root


def _check_distances(vertices: Sequence[Quat], posed: EdgeTriple | EdgeHexad) -> None:
    n = len(vertices)
    for a in range(n):
        for b in range(a):
            got = conormalized_distance(vertices[a], vertices[b])
            if got != posed.squared(a, b):
                raise AssertionError(
                    f"pose distance {got} != {posed.squared(a, b)} for vertices {a},{b}"
                )


def _triangle_coordinates(t: EdgeTriple) -> tuple[Fraction, Fraction, Fraction]:
    u, v, w = t.edges
    area = _face_area(t)
    if area == 0:
        raise ImproperSimplexError("improper simplex: axial pose formulas invalid")
    r1 = Fraction(v * v - w * w + u * u, 2 * u)
    r2 = 2 * area / u
    return area, r1, r2


def axial_pose_triangle(t: EdgeTriple, perm: Permutation | None = None) -> AxialPose:
    """Axial pose ``P=[1,0,0,0]``, ``Q=[1,u,0,0]``, ``R=[r,rR1,rR2,0]``."""
    perm = perm or all_permutations(3)[0]
    posed = t.permuted(perm)
    _, r1, r2 = _triangle_coordinates(posed)
    vertices = (_point(0, 0, 0), _point(posed.u, 0, 0), _point(r1, r2, 0))
    _check_distances(vertices, posed)
    return AxialPose(vertices, t, tuple(perm))


def axial_pose(h: EdgeHexad, perm: Permutation | None = None) -> AxialPose:
    """Axial pose of a tetrahedron with ``S`` above the PQR plane.

    Raises
    ------
    NotHeronianError
        If face PQR or the volume of the permuted hexad is irrational.
    ImproperSimplexError
        If the area of PQR or the volume is zero.
    """
    perm = perm or all_permutations(4)[0]
    posed = h.permuted(perm)
    u, v, w, x, y, z = posed.edges
    area, r1, r2 = _triangle_coordinates(EdgeTriple((u, v, w)))
    det = cm_volume_det(posed)
    volume = rat_sqrt(Fraction(det, 288)) if det >= 0 else None
    if volume is None:
        raise NotHeronianError(f"not Heronian: {posed} has irrational volume")
    if volume == 0:
        raise ImproperSimplexError("improper simplex: axial pose formulas invalid")
    s1 = Fraction(x * x - y * y + u * u, 2 * u)
    s2 = (x * x - z * z + r1 * r1 + r2 * r2 - 2 * s1 * r1) / (2 * r2)
    s3 = 3 * volume / area
    vertices = (
        _point(0, 0, 0),
        _point(u, 0, 0),
        _point(r1, r2, 0),
        _point(s1, s2, s3),
    )
    _check_distances(vertices, posed)
    logger.debug("axial pose of %s under %s: %s", h, format_permutation(perm), vertices)
    return AxialPose(vertices, h, tuple(perm))


def mirror_pose(pose: AxialPose) -> AxialPose:
    """Reflect the pose in the PQR plane (negate every k component)."""
    vertices = tuple(Quat(v.s, v.p, v.q, -v.r) for v in pose.vertices)
    return AxialPose(vertices, pose.edges, pose.permutation)


def is_1mod4_product(n: int) -> bool:
    """Whether every prime factor of ``n`` is congruent to 1 modulo 4."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    return all(p % 4 == 1 for p in sympy.factorint(n))


def check_denominators_1mod4(pose: AxialPose) -> bool:
    """Whether every vertex LCD of the pose is a product of primes 1 mod 4."""
    return all(is_1mod4_product(s) for s in pose.scalars)
