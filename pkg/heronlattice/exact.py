"""Exact integer and rational primitives shared by every other module."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

Rat = Fraction

HALF = Fraction(1, 2)


def int_sqrt(n: int) -> int | None:
    """Return ``k`` with ``k * k == n`` or ``None`` when ``n`` is not a square.

    Raises
    ------
    ValueError
        If ``n`` is negative.
    """
    if n < 0:
        raise ValueError("negative radicand")
    root = math.isqrt(n)
    return root if root * root == n else None


def is_square(n: int) -> bool:
    return n >= 0 and int_sqrt(n) is not None


def rat_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, if it is rational."""
    x = Fraction(x)
    num = int_sqrt(x.numerator)
    den = int_sqrt(x.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def nearest(x: Fraction) -> int:
    """Round half up: ``floor(x + 1/2)``."""
    return math.floor(Fraction(x) + HALF)


def lcd(values: Iterable[Fraction | int]) -> int:
    """Least common denominator of ``values`` (1 for integers or no values)."""
    return math.lcm(1, *(Fraction(v).denominator for v in values))


def primitive_reduce(vector: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational projective vector to its primitive integer form.

    The result has component GCD 1 and a positive scalar slot (the first
    component). When the scalar is zero the first nonzero component is made
    positive instead.

    Examples
    --------
    >>> primitive_reduce([1, Fraction(1, 2), Fraction(1, 3), 0])
    (6, 3, 2, 0)
    """
    values = [Fraction(c) for c in vector]
    if not any(values):
        raise ValueError("zero vector has no primitive representative")
    scale = lcd(values)
    ints = [int(c * scale) for c in values]
    divisor = math.gcd(*ints)
    lead = next(c for c in ints if c)
    if lead < 0:
        divisor = -divisor
    return tuple(c // divisor for c in ints)


def sequential_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs of an ``n``-vertex simplex in sequential edge order.

    For four vertices this is QP, RP, RQ, SP, SQ, SR.
    """
    return tuple((a, b) for a in range(1, n) for b in range(a))


def _vertex_count(edge_count: int) -> int:
    n = (1 + math.isqrt(1 + 8 * edge_count)) // 2
    if n * (n - 1) // 2 != edge_count:
        raise ValueError(f"{edge_count} edges do not form a simplex")
    return n


def bordered_determinant(squared: Sequence[int]) -> int:
    """Cayley-Menger determinant of a simplex given its squared edges.

    ``squared`` lists squared edge lengths in sequential order; the matrix is
    bordered by a leading row and column of ones with a zero corner.
    """
    n = _vertex_count(len(squared))
    size = n + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(1, size):
        rows[0][i] = rows[i][0] = 1
    for (a, b), value in zip(sequential_pairs(n), squared):
        rows[a + 1][b + 1] = rows[b + 1][a + 1] = int(value)
    return int(sympy.Matrix(rows).det(method="bareiss"))


def simplex_content_squared(squared: Sequence[int]) -> Fraction:
    """Squared content (length, area, volume, ...) of a simplex.

    Uses ``(-1)**(k+1) * det / (2**k * (k!)**2)`` with ``k`` the dimension.
    Negative results mean the edges are not realizable in Euclidean space.
    """
    k = _vertex_count(len(squared)) - 1
    det = bordered_determinant(squared)
    sign = -1 if k % 2 == 0 else 1
    return Fraction(sign * det, 2**k * math.factorial(k) ** 2)
