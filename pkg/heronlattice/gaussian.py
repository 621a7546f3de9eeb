"""Gaussian integers with a rounding Euclidean division."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import nearest


@dataclass(frozen=True, order=True)
class GaussInt:
    """The Gaussian integer ``re + im*i``."""

    re: int
    im: int = 0

    def __add__(self, other: GaussInt | int) -> GaussInt:
        other = _coerce(other)
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: GaussInt | int) -> GaussInt:
        other = _coerce(other)
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: GaussInt | int) -> GaussInt:
        other = _coerce(other)
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


def _coerce(value: GaussInt | int) -> GaussInt:
    return value if isinstance(value, GaussInt) else GaussInt(int(value), 0)


def gauss_mod(x: GaussInt | int, y: GaussInt | int) -> GaussInt:
    """Remainder ``x - y*q`` with ``q`` the rounded exact quotient ``x / y``.

    The remainder always has norm strictly below ``norm(y)``.
    """
    x, y = _coerce(x), _coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero")
    t = y.conj() * x
    q = GaussInt(nearest(Fraction(t.re, n)), nearest(Fraction(t.im, n)))
    return x - y * q


def divides(d: GaussInt | int, x: GaussInt | int) -> bool:
    d, x = _coerce(d), _coerce(x)
    if d.is_zero:
        return x.is_zero
    return gauss_mod(x, d).is_zero


def canonical_associate(z: GaussInt) -> GaussInt:
    """Lexicographically greatest of ``z, iz, -z, -iz``."""
    iz = GaussInt(-z.im, z.re)
    return max(z, iz, -z, -iz)


def gauss_gcd(x: GaussInt | int, y: GaussInt | int) -> GaussInt:
    """Greatest common divisor by the Euclidean algorithm, canonical associate."""
    x, y = _coerce(x), _coerce(y)
    if x.is_zero and y.is_zero:
        raise ValueError("gcd(0,0) undefined")
    while not y.is_zero:
        x, y = y, gauss_mod(x, y)
    return canonical_associate(x)
