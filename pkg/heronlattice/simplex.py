"""Edge-length models of triangles and tetrahedra.

Edges are listed in sequential order: for vertices P, Q, R, S the hexad is
``[QP, RP, RQ, SP, SQ, SR]`` and a triple is ``[QP, RP, RQ]``. A vertex
permutation ``perm`` relabels a simplex so that new vertex ``i`` is source
vertex ``perm[i]``; it is written as a string of vertex letters, e.g.
``"QRPS"``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar, Iterator, Sequence

from .errors import DomainError
from .exact import bordered_determinant, int_sqrt, sequential_pairs

VERTEX_NAMES = "PQRST"

Permutation = tuple[int, ...]


class NotATriangleError(DomainError):
    """Raised when three lengths violate the triangle inequality."""


class NotHeronianError(DomainError):
    """Raised when an area or volume required to be rational is not."""


class ImproperSimplexError(DomainError):
    """Raised when a simplex is flat and a construction needs it proper."""


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """All vertex permutations of ``n`` vertices, identity first."""
    return tuple(itertools.permutations(range(n)))


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse a vertex-letter permutation such as ``"QRPS"``."""
    names = VERTEX_NAMES[:n]
    text = text.strip().upper()
    if len(text) != n or sorted(text) != sorted(names):
        raise ValueError(f"invalid permutation {text!r} for vertices {names}")
    return tuple(names.index(ch) for ch in text)


def format_permutation(perm: Sequence[int]) -> str:
    return "".join(VERTEX_NAMES[i] for i in perm)


@dataclass(frozen=True, order=True)
class _EdgeSet:
    edges: tuple[int, ...]

    vertex_count: ClassVar[int] = 0

    def __post_init__(self) -> None:
        expected = self.vertex_count * (self.vertex_count - 1) // 2
        edges = tuple(int(e) for e in self.edges)
        if len(edges) != expected:
            raise ValueError(
                f"{type(self).__name__} needs {expected} edges, got {len(edges)}"
            )
        if any(e <= 0 for e in edges):
            raise ValueError(f"edge lengths must be positive, got {list(edges)}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def of(cls, *edges: int):
        return cls(tuple(edges))

    @classmethod
    def parse(cls, text: str):
        """Parse comma- or whitespace-separated integers, brackets optional."""
        cleaned = text.strip().strip("[]()").replace(",", " ")
        try:
            values = tuple(int(tok) for tok in cleaned.split())
        except ValueError as exc:
            raise ValueError(f"invalid edge list {text!r}") from exc
        return cls(values)

    def __str__(self) -> str:
        return ",".join(map(str, self.edges))

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    @property
    def diameter(self) -> int:
        return max(self.edges)

    @property
    def is_primitive(self) -> bool:
        return math.gcd(*self.edges) == 1

    def edge(self, a: int, b: int) -> int:
        """Length of the edge between vertices ``a`` and ``b``."""
        if a == b:
            return 0
        hi, lo = max(a, b), min(a, b)
        return self.edges[hi * (hi - 1) // 2 + lo]

    def squared(self, a: int, b: int) -> int:
        return self.edge(a, b) ** 2

    def squared_edges(self) -> tuple[int, ...]:
        return tuple(e * e for e in self.edges)

    def permuted(self, perm: Sequence[int]):
        """The same simplex with new vertex ``i`` taken from source ``perm[i]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError(f"not a permutation of {self.vertex_count} vertices: {perm}")
        pairs = sequential_pairs(self.vertex_count)
        return type(self)(tuple(self.edge(perm[a], perm[b]) for a, b in pairs))


@dataclass(frozen=True, order=True)
class EdgeTriple(_EdgeSet):
    """Triangle edges ``[u, v, w] = [QP, RP, RQ]``."""

    vertex_count: ClassVar[int] = 3

    @property
    def u(self) -> int:
        return self.edges[0]

    @property
    def v(self) -> int:
        return self.edges[1]

    @property
    def w(self) -> int:
        return self.edges[2]


@dataclass(frozen=True, order=True)
class EdgeHexad(_EdgeSet):
    """Tetrahedron edges ``[u, v, w, x, y, z] = [QP, RP, RQ, SP, SQ, SR]``."""

    vertex_count: ClassVar[int] = 4

    def faces(self) -> tuple[EdgeTriple, ...]:
        """The faces PQR, PQS, PRS and QRS as triples in their own order."""
        return tuple(
            EdgeTriple((self.edge(b, a), self.edge(c, a), self.edge(c, b)))
            for a, b, c in itertools.combinations(range(4), 3)
        )


def hero_area_sq16(t: EdgeTriple) -> int:
    """``(4d)**2`` for a triangle of area ``d`` by Heron's product.

    Raises
    ------
    NotATriangleError
        If a factor is negative; degenerate triangles give 0.
    """
    u, v, w = t.edges
    factors = (u + v + w, u + v - w, u - v + w, -u + v + w)
    if any(f < 0 for f in factors):
        raise NotATriangleError(f"not a triangle: {t}")
    return factors[0] * factors[1] * factors[2] * factors[3]


def cm_area_sq(t: EdgeTriple) -> int:
    """``(4d)**2`` from the bordered determinant (which equals ``-(4d)**2``)."""
    return -bordered_determinant(t.squared_edges())


def cm_volume_det(h: EdgeHexad) -> int:
    """Bordered determinant ``D = 2 * (12e)**2`` of a tetrahedron of volume ``e``."""
    return bordered_determinant(h.squared_edges())


def triangle_area(t: EdgeTriple) -> Fraction | None:
    """Rational area, or ``None`` when the area is irrational."""
    root = int_sqrt(hero_area_sq16(t))
    return None if root is None else Fraction(root, 4)


def tetrahedron_volume(h: EdgeHexad) -> Fraction | None:
    """Rational volume, or ``None`` when irrational or not realizable."""
    det = cm_volume_det(h)
    if det < 0 or det % 2:
        return None
    root = int_sqrt(det // 2)
    return None if root is None else Fraction(root, 12)


def is_heronian_triangle(t: EdgeTriple) -> bool:
    try:
        return triangle_area(t) is not None
    except NotATriangleError:
        return False


def is_heronian(h: EdgeHexad) -> bool:
    """Whether all four faces and the volume are rational."""
    if not all(is_heronian_triangle(face) for face in h.faces()):
        return False
    return tetrahedron_volume(h) is not None


def is_proper(simplex: EdgeTriple | EdgeHexad) -> bool:
    """Whether the simplex has nonzero content."""
    try:
        if isinstance(simplex, EdgeTriple):
            return hero_area_sq16(simplex) > 0
        return all(hero_area_sq16(f) > 0 for f in simplex.faces()) and cm_volume_det(simplex) > 0
    except NotATriangleError:
        return False


def canonical_hexad(h: EdgeHexad) -> tuple[EdgeHexad, Permutation]:
    """Lexicographically greatest relabeling and the first permutation reaching it."""
    best, best_perm = h, all_permutations(4)[0]
    for perm in all_permutations(4):
        candidate = h.permuted(perm)
        if candidate.edges > best.edges:
            best, best_perm = candidate, perm
    return best, best_perm


def canonical_triple(t: EdgeTriple) -> EdgeTriple:
    return EdgeTriple(tuple(sorted(t.edges, reverse=True)))


def stabilizer(h: EdgeHexad) -> tuple[Permutation, ...]:
    """Vertex permutations that leave the hexad unchanged."""
    return tuple(perm for perm in all_permutations(4) if h.permuted(perm) == h)


@dataclass(frozen=True)
class SymmetryClass:
    """Symmetry tag and number of distinct labelled copies (the isomorph count).

    The isomorph count is the order of the stabilizer subgroup of S4.
    """

    tag: str
    isomorph_count: int

    def __str__(self) -> str:
        return f"{self.tag} ({self.isomorph_count})"


def _moved(perm: Permutation) -> int:
    return sum(1 for i, j in enumerate(perm) if i != j)


def classify_symmetry(h: EdgeHexad) -> SymmetryClass:
    """Name the equal-edge pattern of a hexad from its stabilizer."""
    group = stabilizer(h)
    order = len(group)
    has_transposition = any(_moved(perm) == 2 for perm in group)
    if order == 1:
        tag = "scalene"
    elif order == 2:
        tag = "semi-isosceles" if has_transposition else "semi-isohedral"
    elif order == 4:
        tag = "isosceles" if has_transposition else "isohedral"
    elif order == 6:
        tag = "equilateral"
    elif order == 8:
        tag = "isohedral-isosceles"
    elif order == 24:
        tag = "regular"
    else:  # pragma: no cover - S4 stabilizers of edge labellings stop here
        raise ValueError(f"unexpected stabilizer order {order} for {h}")
    return SymmetryClass(tag, order)


_OPPOSITE_EDGE = {0: (2, 1), 1: (2, 0), 2: (1, 0)}


def cot_half_angle(t: EdgeTriple, vertex: int | str) -> Fraction:
    """Cotangent of half the angle at ``vertex`` of a proper Heronian triangle.

    Equal to ``(sigma - a) * sigma / d`` with ``sigma`` the semiperimeter,
    ``a`` the opposite edge and ``d`` the area.
    """
    index = VERTEX_NAMES.index(vertex.upper()) if isinstance(vertex, str) else vertex
    if index not in _OPPOSITE_EDGE:
        raise ValueError(f"triangle vertex must be P, Q or R, got {vertex!r}")
    area = triangle_area(t)
    if area is None:
        raise NotHeronianError(f"not Heronian: triangle {t} has irrational area")
    if area == 0:
        raise ImproperSimplexError(f"improper simplex: triangle {t} is degenerate")
    semiperimeter = Fraction(sum(t.edges), 2)
    opposite = t.edge(*_OPPOSITE_EDGE[index])
    return (semiperimeter - opposite) * semiperimeter / area
