"""Exhaustive enumeration of lattice embeddings and small lattice searches."""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np
import sympy

from .canonical import (
    CanonicalEmbedding,
    Strength,
    apply_isometry,
    canonical_points,
    lattice_isometries,
)
from .embed import LatticeEmbedding, rotate_point_z3, verify_embedding
from .errors import DomainError
from .exact import int_sqrt, primitive_reduce, sequential_pairs, simplex_content_squared
from .pose import axial_pose, coordinates, mirror_pose
from .quaternion import Quat
from .simplex import EdgeHexad, EdgeTriple, all_permutations

logger = logging.getLogger(__name__)


class DegenerateFaceError(DomainError):
    """Raised when a face is collinear and does not fix a unique rotation."""


class BudgetExhausted(Exception):
    """Raised when a search needs more work than its node budget allows."""

    def __init__(self, required: int, budget: int) -> None:
        super().__init__(f"budget exhausted: search needs {required} nodes, budget is {budget}")
        self.required = required
        self.budget = budget


class ThreeSquaresSolution(NamedTuple):
    """``x**2 + y**2 + z**2 == w**2`` with ``0 <= x <= y <= z``."""

    x: int
    y: int
    z: int
    w: int


def _four_square_reps(n: int):
    """Non-negative ``(p, q, u, v)`` with ``p*p + q*q + u*u + v*v == n``."""
    for p in range(math.isqrt(n) + 1):
        rest_p = n - p * p
        for q in range(math.isqrt(rest_p) + 1):
            rest_q = rest_p - q * q
            for u in range(math.isqrt(rest_q) + 1):
                v = int_sqrt(rest_q - u * u)
                if v is not None:
                    yield p, q, u, v


def solve_three_squares(w: int) -> frozenset[ThreeSquaresSolution]:
    """All sorted non-negative solutions of ``x**2 + y**2 + z**2 == w**2``.

    Solutions come from the quaternion parametrization
    ``(p²+q²-u²-v², 2(pu+qv), 2(pv-qu))`` with ``p²+q²+u²+v² = w'`` for every
    divisor ``w'`` of ``w``, scaled by ``w / w'``. Flipping the signs of
    ``q`` and ``v`` covers every sign pattern up to the ones that only negate
    outputs.
    """
    if w <= 0:
        raise ValueError(f"w must be positive, got {w}")
    found: set[ThreeSquaresSolution] = set()
    for divisor in sympy.divisors(w):
        scale = w // divisor
        for p, q0, u, v0 in _four_square_reps(divisor):
            for q, v in ((q0, v0), (-q0, v0), (q0, -v0), (-q0, -v0)):
                x = p * p + q * q - u * u - v * v
                y = 2 * (p * u + q * v)
                z = 2 * (p * v - q * u)
                a, b, c = sorted((abs(x) * scale, abs(y) * scale, abs(z) * scale))
                found.add(ThreeSquaresSolution(a, b, c, w))
    return frozenset(found)


def three_square_points(w: int) -> tuple[tuple[int, int, int], ...]:
    """All lattice points of Z3 at distance ``w`` from the origin, sorted."""
    points = {
        apply_isometry(isometry, sol[:3])
        for sol in solve_three_squares(w)
        for isometry in lattice_isometries(3)
    }
    return tuple(sorted(points))


def two_square_points(n: int) -> tuple[tuple[int, int], ...]:
    """All lattice points ``(x, y)`` with ``x*x + y*y == n``, sorted."""
    points = set()
    for x in range(math.isqrt(n) + 1):
        y = int_sqrt(n - x * x)
        if y is not None:
            for sx, sy in itertools.product((1, -1), repeat=2):
                points.add((sx * x, sy * y))
    return tuple(sorted(points))


def _scaled_vectors(points: Sequence[Quat]) -> list[tuple[int, int, int]]:
    scale = math.lcm(*(p.s for p in points))
    return [tuple(int(c * scale) for c in coordinates(p)) for p in points]


def _cross(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def rotor_from_face_pair(axial: Sequence[Quat], target: Sequence[Quat]) -> Quat | None:
    """Rotor ``X`` with ``conj(X) * a * X`` proportional to ``b`` for a face pair.

    Both faces have their first vertex at the origin. ``X`` spans the null
    space of the linear system ``a * X = X * b`` over the two remaining vertex
    pairs. Returns ``None`` when the faces are not congruent.

    Raises
    ------
    DegenerateFaceError
        If a face is collinear or the null space is not one-dimensional.
    """
    if len(axial) != 3 or len(target) != 3:
        raise ValueError("faces need exactly three vertices")
    if axial[0].vector != (0, 0, 0) or target[0].vector != (0, 0, 0):
        raise ValueError("faces must start at the origin")
    a1, a2, b1, b2 = _scaled_vectors([axial[1], axial[2], target[1], target[2]])
    if _cross(a1, a2) == (0, 0, 0) or _cross(b1, b2) == (0, 0, 0):
        raise DegenerateFaceError("collinear face does not fix a rotation")
    rows = []
    for a, b in ((a1, b1), (a2, b2)):
        d = [x - y for x, y in zip(a, b)]
        s = [x + y for x, y in zip(a, b)]
        rows.extend(
            [
                [0, -d[0], -d[1], -d[2]],
                [d[0], 0, -s[2], s[1]],
                [d[1], s[2], 0, -s[0]],
                [d[2], -s[1], s[0], 0],
            ]
        )
    basis = sympy.Matrix(rows).nullspace()
    if not basis:
        return None
    if len(basis) > 1:
        raise DegenerateFaceError(f"rotation not unique: null space of dimension {len(basis)}")
    rotor = Quat.of(primitive_reduce([Fraction(int(c.p), int(c.q)) for c in basis[0]]))
    for a, b in zip(axial[1:], target[1:]):
        if rotate_point_z3(rotor, a) != Quat.of(primitive_reduce(list(b))):
            return None
    return rotor


def _check_budget(required: int, budget: int | None) -> None:
    if budget is not None and required > budget:
        raise BudgetExhausted(required, budget)


def _canonicalize(embedding: LatticeEmbedding, strength: str) -> CanonicalEmbedding:
    labels = embedding.labels if strength == "weak" else None
    return canonical_points(embedding.points(), labels, strength)


def _scan_tetra(task) -> set[CanonicalEmbedding]:
    h, poses, q_points, r_points, dot, strength = task
    r_array = np.array(r_points, dtype=np.int64)
    forms: set[CanonicalEmbedding] = set()
    for q in q_points:
        hits = np.nonzero(r_array @ np.array(q, dtype=np.int64) == dot)[0]
        for index in hits:
            r = tuple(int(c) for c in r_array[index])
            face = (Quat(1), Quat(1, *q), Quat(1, *r))
            rotor = rotor_from_face_pair(poses[0].vertices[:3], face)
            if rotor is None:
                continue
            for pose in poses:
                apex = rotate_point_z3(rotor, pose.vertices[3])
                if apex.s != 1:
                    continue
                embedding = LatticeEmbedding(
                    (*face, apex), h, pose.permutation, (rotor,)
                )
                if verify_embedding(embedding):
                    forms.add(_canonicalize(embedding, strength))
    return forms


def _chunks(items: Sequence, count: int) -> list[list]:
    count = max(1, min(count, len(items)))
    return [list(items[i::count]) for i in range(count)]


def exhaustive_embeddings(
    h: EdgeHexad,
    strength: Strength = "strong",
    budget: int | None = None,
    jobs: int = 1,
) -> tuple[CanonicalEmbedding, ...]:
    """Every essentially distinct lattice embedding of a Heronian tetrahedron.

    ``Q`` ranges over one point per isometry class of the sphere of radius
    ``u``, ``R`` over every lattice point of the sphere of radius ``v`` whose
    dot product with ``Q`` matches ``w``. The face rotor then places ``S``
    from the axial pose and from its mirror image.

    Raises
    ------
    BudgetExhausted
        If ``|Q| * |R|`` pair comparisons exceed ``budget``.
    """
    pose = axial_pose(h)
    u, v, w = pose.posed_edges.edges[:3]
    twice_dot = u * u + v * v - w * w
    if twice_dot % 2:
        return ()
    q_points = [sol[:3] for sol in sorted(solve_three_squares(u))]
    r_points = three_square_points(v)
    required = len(q_points) * len(r_points)
    _check_budget(required, budget)
    logger.info(
        "exhaustive search of %s: %d Q x %d R candidates", h, len(q_points), len(r_points)
    )
    poses = (pose, mirror_pose(pose))
    tasks = [
        (h, poses, chunk, r_points, twice_dot // 2, strength)
        for chunk in _chunks(q_points, jobs)
    ]
    forms: set[CanonicalEmbedding] = set()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for found in pool.map(_scan_tetra, tasks):
                forms |= found
    else:
        for task in tasks:
            forms |= _scan_tetra(task)
    logger.info("exhaustive search of %s: %d %s form(s)", h, len(forms), strength)
    return tuple(sorted(forms))


def exhaustive_triangle_embeddings(
    t: EdgeTriple, strength: Strength = "strong", budget: int | None = None
) -> tuple[CanonicalEmbedding, ...]:
    """Every essentially distinct embedding of a triangle into Z2."""
    u, v, w = t.edges
    twice_dot = u * u + v * v - w * w
    if twice_dot % 2:
        return ()
    dot = twice_dot // 2
    q_points = [p for p in two_square_points(u * u) if 0 <= p[0] <= p[1]]
    r_points = two_square_points(v * v)
    _check_budget(len(q_points) * len(r_points), budget)
    identity = all_permutations(3)[0]
    forms = set()
    for q in q_points:
        for r in r_points:
            if q[0] * r[0] + q[1] * r[1] != dot:
                continue
            vertices = (Quat(1), Quat(1, q[0], q[1], 0), Quat(1, r[0], r[1], 0))
            embedding = LatticeEmbedding(vertices, t, identity)
            if verify_embedding(embedding):
                forms.add(_canonicalize(embedding, strength))
    return tuple(sorted(forms))


@dataclass(frozen=True)
class PentatopeSpec:
    """Squared edges of a 4-simplex P, Q, R, S, T in sequential order."""

    squared_edges: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(e) for e in self.squared_edges)
        if len(values) != 10:
            raise ValueError(f"a pentatope needs 10 squared edges, got {len(values)}")
        if any(e < 0 for e in values):
            raise ValueError("squared edges must be non-negative")
        object.__setattr__(self, "squared_edges", values)

    def squared(self, a: int, b: int) -> int:
        if a == b:
            return 0
        return self.squared_edges[sequential_pairs(5).index((max(a, b), min(a, b)))]

    def content_squared(self) -> Fraction:
        """Squared 4-volume from the Cayley-Menger determinant."""
        return simplex_content_squared(self.squared_edges)


def search_z4(spec: PentatopeSpec, bound: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All placements of the pentatope in Z4 with coordinates in ``[-bound, bound]``.

    Vertex P sits at the origin; every other vertex is drawn from the lattice
    points of the box at its squared distance from P and checked against the
    vertices already placed.
    """
    if bound < 0:
        raise ValueError(f"bound must be non-negative, got {bound}")
    by_norm: dict[int, list[tuple[int, ...]]] = {}
    for point in itertools.product(range(-bound, bound + 1), repeat=4):
        by_norm.setdefault(sum(c * c for c in point), []).append(point)

    found: list[tuple[tuple[int, ...], ...]] = []

    def place(placed: list[tuple[int, ...]]) -> None:
        k = len(placed)
        if k == 5:
            found.append(tuple(placed))
            return
        for candidate in by_norm.get(spec.squared(k, 0), []):
            if all(
                sum((a - b) ** 2 for a, b in zip(candidate, placed[j])) == spec.squared(k, j)
                for j in range(1, k)
            ):
                place(placed + [candidate])

    place([(0, 0, 0, 0)])
    logger.info("Z4 search with bound %d: %d placement(s)", bound, len(found))
    return tuple(found)
