"""Lipschitz quaternions: integer points, rotors and one-sided Euclidean GCDs.

A :class:`Quat` ``[s, p, q, r]`` plays two roles. As a rotor it acts on a point
``P`` by ``conj(X) * P * X``. As a projective point its scalar slot holds the
least common denominator of the Cartesian coordinates ``(p/s, q/s, r/s)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import DomainError
from .exact import nearest

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]
QuatRat = tuple[Fraction, Fraction, Fraction, Fraction]


class GCDAbortError(DomainError):
    """Raised when the quaternion Euclidean loop stops decreasing the norm."""


@dataclass(frozen=True, order=True)
class Quat:
    """Integer quaternion ``s + p*i + q*j + r*k``."""

    s: int
    p: int = 0
    q: int = 0
    r: int = 0

    @classmethod
    def of(cls, values: Sequence[int]) -> Quat:
        s, p, q, r = (int(v) for v in values)
        return cls(s, p, q, r)

    def __iter__(self):
        return iter((self.s, self.p, self.q, self.r))

    def __add__(self, other: Quat | int) -> Quat:
        other = _coerce(other)
        return Quat(self.s + other.s, self.p + other.p, self.q + other.q, self.r + other.r)

    __radd__ = __add__

    def __sub__(self, other: Quat | int) -> Quat:
        other = _coerce(other)
        return Quat(self.s - other.s, self.p - other.p, self.q - other.q, self.r - other.r)

    def __neg__(self) -> Quat:
        return Quat(-self.s, -self.p, -self.q, -self.r)

    def __mul__(self, other: Quat | int) -> Quat:
        return quat_mul(self, _coerce(other))

    def __rmul__(self, other: int) -> Quat:
        return quat_mul(_coerce(other), self)

    def conj(self) -> Quat:
        return Quat(self.s, -self.p, -self.q, -self.r)

    def norm(self) -> int:
        return self.s * self.s + self.p * self.p + self.q * self.q + self.r * self.r

    @property
    def vector(self) -> tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def is_zero(self) -> bool:
        return not (self.s or self.p or self.q or self.r)

    def __str__(self) -> str:
        return f"[{self.s},{self.p},{self.q},{self.r}]"


ONE = Quat(1, 0, 0, 0)
UNITS: tuple[Quat, ...] = (
    Quat(1, 0, 0, 0),
    Quat(-1, 0, 0, 0),
    Quat(0, 1, 0, 0),
    Quat(0, -1, 0, 0),
    Quat(0, 0, 1, 0),
    Quat(0, 0, -1, 0),
    Quat(0, 0, 0, 1),
    Quat(0, 0, 0, -1),
)


def _coerce(value: Quat | int) -> Quat:
    return value if isinstance(value, Quat) else Quat(int(value), 0, 0, 0)


def quat_mul(x: Quat, y: Quat) -> Quat:
    """Hamilton product ``x * y`` with ``i*j = k`` and ``j*i = -k``."""
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return Quat(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quat_round(x: Sequence[Fraction]) -> Quat:
    """Round each component with ``floor(c + 1/2)``."""
    return Quat(*(nearest(c) for c in x))


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def quat_mod(x: Quat, y: Quat | int, side: Side) -> Quat:
    """One-sided remainder of ``x`` by ``y``.

    ``left`` computes ``x - y*q`` with ``q = <conj(y)*x / norm(y)>``;
    ``right`` computes ``x - q*y`` with ``q = <x*conj(y) / norm(y)>``. Unlike
    Gaussian integers the remainder may have norm equal to ``norm(y)``.
    """
    _check_side(side)
    y = _coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero")
    t = y.conj() * x if side == "left" else x * y.conj()
    q = quat_round([Fraction(c, n) for c in t])
    return x - y * q if side == "left" else x - q * y


def canonical_associate(x: Quat, side: Side) -> Quat:
    """Lexicographically greatest associate of a one-sided divisor.

    Left divisors are associated through unit products on the right
    (``x * u``), right divisors through unit products on the left (``u * x``).
    """
    _check_side(side)
    if side == "left":
        return max(x * u for u in UNITS)
    return max(u * x for u in UNITS)


def associated(x: Quat, y: Quat, side: Side) -> bool:
    """Whether ``y`` is ``x`` times a unit on the side opposite ``side``."""
    _check_side(side)
    if side == "left":
        return any(x * u == y for u in UNITS)
    return any(u * x == y for u in UNITS)


def left_divides(d: Quat, x: Quat) -> bool:
    """Whether ``x = d * q`` for some Lipschitz ``q``."""
    if d.is_zero:
        return x.is_zero
    n = d.norm()
    return all(c % n == 0 for c in d.conj() * x)


def right_divides(d: Quat, x: Quat) -> bool:
    """Whether ``x = q * d`` for some Lipschitz ``q``."""
    if d.is_zero:
        return x.is_zero
    n = d.norm()
    return all(c % n == 0 for c in x * d.conj())


def quat_gcd(y: Quat | int, z: Quat | int, side: Side) -> Quat:
    """One-sided greatest common divisor by the Euclidean algorithm.

    Parameters
    ----------
    y, z
        Operands; integers are promoted to scalar quaternions.
    side
        ``"left"`` for a common left divisor, ``"right"`` for a right one.

    Returns
    -------
    Quat
        The GCD, normalized with :func:`canonical_associate`.

    Raises
    ------
    GCDAbortError
        When a remainder fails to decrease in norm; no GCD is produced.
    ValueError
        When both operands are zero.
    """
    _check_side(side)
    y, z = _coerce(y), _coerce(z)
    if y.is_zero and z.is_zero:
        raise ValueError("gcd(0,0) undefined")
    steps = 0
    while not z.is_zero:
        x, y = y, z
        z = quat_mod(x, y, side)
        steps += 1
        if z.norm() >= y.norm():
            raise GCDAbortError(
                f"no GCD exists: remainder {z} of {x} by {y} did not decrease "
                "(even-norm obstruction)"
            )
    logger.debug("%s GCD %s after %d division steps", side, y, steps)
    return canonical_associate(y, side)
