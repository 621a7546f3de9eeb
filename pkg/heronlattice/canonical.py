"""Canonical forms of lattice embeddings under lattice isometries.

Two embeddings are essentially the same when a lattice isometry (a signed
permutation of the axes) followed by a translation maps one onto the other.
The canonical representative is the translation-normalized vertex list,
sorted ascending, that is smallest over all isometries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Literal, Sequence

from .quaternion import Quat

if TYPE_CHECKING:
    from .embed import LatticeEmbedding

Strength = Literal["weak", "strong"]
Point = tuple[int, ...]
Isometry = tuple[tuple[int, ...], tuple[int, ...]]


@lru_cache(maxsize=None)
def lattice_isometries(dim: int) -> tuple[Isometry, ...]:
    """All signed axis permutations ``(axes, signs)`` of ``Z**dim``."""
    return tuple(
        (axes, signs)
        for axes in itertools.permutations(range(dim))
        for signs in itertools.product((1, -1), repeat=dim)
    )


def apply_isometry(isometry: Isometry, point: Sequence[int]) -> Point:
    axes, signs = isometry
    return tuple(sign * point[axis] for axis, sign in zip(axes, signs))


def normalize_translation(points: Sequence[Sequence[int]]) -> tuple[Point, ...]:
    """Translate so that the minimum of every coordinate is zero."""
    if not points:
        return ()
    lows = [min(coords) for coords in zip(*points)]
    return tuple(tuple(c - low for c, low in zip(p, lows)) for p in points)


def cube_rotors() -> tuple[Quat, ...]:
    """Integer rotors of the 24 rotations of the cube."""
    rotors = [Quat(1, 0, 0, 0), Quat(0, 1, 0, 0), Quat(0, 0, 1, 0), Quat(0, 0, 0, 1)]
    for axis in range(3):
        for sign in (1, -1):
            parts = [0, 0, 0]
            parts[axis] = sign
            rotors.append(Quat(1, *parts))
    for a, b in ((0, 1), (1, 2), (0, 2)):
        for sign in (1, -1):
            parts = [0, 0, 0]
            parts[a], parts[b] = 1, sign
            rotors.append(Quat(0, *parts))
    for signs in itertools.product((1, -1), repeat=3):
        rotors.append(Quat(1, *signs))
    return tuple(rotors)


def rotor_matrix(x: Quat) -> tuple[tuple[Fraction, ...], ...]:
    """Rows of the rotation matrix of ``v -> conj(x) v x / norm(x)``.

    Column ``j`` is the image of the ``j``-th basis vector.
    """
    n = x.norm()
    if n == 0:
        raise ValueError("zero rotor")
    images = []
    for axis in range(3):
        basis = [0, 0, 0]
        basis[axis] = 1
        image = x.conj() * Quat(0, *basis) * x
        images.append([Fraction(c, n) for c in image.vector])
    return tuple(tuple(images[col][row] for col in range(3)) for row in range(3))


@dataclass(frozen=True, order=True)
class CanonicalEmbedding:
    """Canonical vertex list; ``labels`` name the source vertex of each entry.

    Strong forms carry no labels.
    """

    vertices: tuple[Point, ...]
    strength: str = "strong"
    labels: tuple[int, ...] | None = None

    @property
    def dimension(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def to_quats(self) -> tuple[Quat, ...]:
        return tuple(Quat(1, *(tuple(v) + (0,) * (3 - len(v)))) for v in self.vertices)

    def to_lines(self) -> list[str]:
        return ["[" + ",".join(map(str, (1, *v))) + "]" for v in self.vertices]


def canonical_points(
    points: Sequence[Sequence[int]],
    labels: Sequence[int] | None = None,
    strength: Strength = "strong",
) -> CanonicalEmbedding:
    """Canonical form of a raw list of lattice points.

    The weak form keeps ``labels`` attached to their points and, among the
    isometries reaching the smallest vertex list, picks the smallest label
    order. Without labels the weak and strong forms coincide.
    """
    if strength not in ("weak", "strong"):
        raise ValueError(f"strength must be 'weak' or 'strong', got {strength!r}")
    if not points:
        raise ValueError("cannot canonicalize an empty point list")
    dim = len(points[0])
    if labels is None:
        labels = tuple(range(len(points)))
    best: tuple[tuple[Point, ...], tuple[int, ...]] | None = None
    for isometry in lattice_isometries(dim):
        moved = normalize_translation([apply_isometry(isometry, p) for p in points])
        pairs = sorted(zip(moved, labels))
        key = (tuple(p for p, _ in pairs), tuple(lab for _, lab in pairs))
        if best is None or key < best:
            best = key
    assert best is not None
    if strength == "strong":
        return CanonicalEmbedding(best[0], "strong", None)
    return CanonicalEmbedding(best[0], "weak", best[1])


def strong_canonical(e: LatticeEmbedding) -> CanonicalEmbedding:
    """Canonical form ignoring which source vertex sits where."""
    return canonical_points(e.points(), None, "strong")


def weak_canonical(e: LatticeEmbedding) -> CanonicalEmbedding:
    """Canonical form remembering the source label of every vertex."""
    return canonical_points(e.points(), e.labels, "weak")


def is_axial_embedding(form: CanonicalEmbedding) -> bool:
    """Whether some vertex labelling puts the embedding in axial pose.

    Axial pose up to lattice isometry and translation: one vertex at the
    origin, a second on a coordinate axis, a third in a coordinate plane
    through that axis.
    """
    for a, b, c in itertools.permutations(form.vertices, 3):
        axes = [i for i, (x, y) in enumerate(zip(a, b)) if x != y]
        if len(axes) != 1:
            continue
        off_axis = [i for i, (x, z) in enumerate(zip(a, c)) if x != z and i != axes[0]]
        if len(off_axis) <= 1:
            return True
    return False
