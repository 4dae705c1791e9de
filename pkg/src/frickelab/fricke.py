"""The Fricke surface x^2 + y^2 + z^2 = 3xyz (+ sigma).

Membership, the Viete generators, the rational parametrizations, the
secant composition law with its degenerate cases, the star law, and the
transferred structures on the projective plane.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import (
    DomainError,
    ProjectivePoint,
    Rat,
    SingularPoint,
    ZeroArgument,
    normalize_projective,
    surface_defect,
)


class SigmaUnsupported(DomainError):
    pass


class BasePointUndefined(DomainError):
    pass


class UndefinedImage(DomainError):
    pass


class OffSurface(DomainError):
    pass


@dataclass(frozen=True, slots=True)
class FrickeSurface:
    sigma: Fraction = Fraction(0)

    def contains(self, x: Rat, y: Rat, z: Rat) -> bool:
        return surface_defect("fricke", (x, y, z), self.sigma) == 0


FRICKE = FrickeSurface()


@dataclass(frozen=True, slots=True)
class FrickePoint:
    """An affine point validated to lie on its surface exactly."""

    x: Fraction
    y: Fraction
    z: Fraction
    surface: FrickeSurface = FRICKE

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "z", Fraction(self.z))
        if not self.surface.contains(self.x, self.y, self.z):
            raise OffSurface(f"({self.x}, {self.y}, {self.z}) is not on the surface")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.x, self.y, self.z)

    @property
    def is_origin(self) -> bool:
        return self.x == self.y == self.z == 0


# -- composition results ----------------------------------------------------

UNDEFINED_COINCIDENT = "coincident-points"
UNDEFINED_ORIGIN = "origin-operand"
UNDEFINED_SAME_INFINITY_LINE = "same-infinity-line"
UNDEFINED_SECANT_AT_INFINITY = "secant-at-infinity"


@dataclass(frozen=True, slots=True)
class Finite:
    point: object  # FrickePoint or double_fricke.F2Point


@dataclass(frozen=True, slots=True)
class Infinite:
    """Composition escaped to one of the three lines at infinity (s = 0)."""

    point: ProjectivePoint

    def __post_init__(self) -> None:
        assert self.point.coords[-1] == 0


@dataclass(frozen=True, slots=True)
class Undefined:
    reason: str


ComposeResult = Union[Finite, Infinite, Undefined]


# -- Viete generators ---------------------------------------------------------


def viete(p: FrickePoint, generator: str) -> FrickePoint:
    """Apply L: (x,y,z) -> (x, 3xy-z, y) or R: (x,y,z) -> (y, 3yz-x, z)."""
    if p.surface.sigma != 0:
        raise SigmaUnsupported("Viete generators are stated for sigma = 0 only")
    x, y, z = p.coords
    if generator == "L":
        return FrickePoint(x, 3 * x * y - z, y)
    if generator == "R":
        return FrickePoint(y, 3 * y * z - x, z)
    raise ValueError(f"generator must be 'L' or 'R', got {generator!r}")


# -- parametrizations ---------------------------------------------------------


def phi(p: ProjectivePoint) -> ProjectivePoint:
    """Parametrize the projectivized surface by the plane.

    [p:q:r] -> [p*s : q*s : r*s : 3pqr] with s = p^2+q^2+r^2.  Total over
    the rationals (p^2+q^2+r^2 = 0 has no rational points).
    """
    a, b, c = p.coords
    s = a * a + b * b + c * c
    return normalize_projective([a * s, b * s, c * s, 3 * a * b * c])


def psi(p: ProjectivePoint) -> ProjectivePoint:
    """Inverse of phi: forget the last coordinate."""
    x, y, z, s = p.coords
    if x == y == z == 0:
        raise SingularPoint("[0:0:0:1] has no image under psi")
    return normalize_projective([x, y, z])


def param_affine(P: Rat, Q: Rat) -> FrickePoint:
    """The affine chart (P,Q) -> ((P^2+Q^2+1)/3Q, ./3P, ./3PQ)."""
    P, Q = Fraction(P), Fraction(Q)
    if P == 0 or Q == 0:
        raise ZeroArgument("chart parameters must be nonzero")
    s = P * P + Q * Q + 1
    return FrickePoint(s / (3 * Q), s / (3 * P), s / (3 * P * Q))


def param_affine_inverse(p: FrickePoint) -> tuple[Fraction, Fraction]:
    """Chart coordinates (x/z, y/z) of a point with z != 0."""
    if p.z == 0:
        raise ZeroArgument("chart inverse needs z != 0")
    return (p.x / p.z, p.y / p.z)


# -- the secant composition ---------------------------------------------------


def compose(p: FrickePoint, q: FrickePoint) -> ComposeResult:
    """Third intersection of the line pq with the surface.

    Finite when all three coordinate differences are nonzero; otherwise
    the answer lives on a line at infinity and is projectivized.
    """
    if p.surface != q.surface:
        raise ValueError("operands live on different surfaces")
    (a, b, c), (m, n, k) = p.coords, q.coords
    if (a, b, c) == (m, n, k):
        return Undefined(UNDEFINED_COINCIDENT)
    if p.is_origin or q.is_origin:
        return Undefined(UNDEFINED_ORIGIN)
    da, db, dc = a - m, b - n, c - k
    if da and db and dc:
        w = 2 * (a * m + b * n + c * k)
        x = (3 * (a * n * k + b * c * m) - w) / (3 * db * dc)
        y = (3 * (b * m * k + a * c * n) - w) / (3 * da * dc)
        z = (3 * (c * m * n + a * b * k) - w) / (3 * da * db)
        return Finite(FrickePoint(x, y, z, p.surface))
    # the line meets the surface again at infinity: when a = m the third
    # point is [0 : b-n : c-k : 0], and the other vanishing patterns follow
    # by the symmetry of the equation
    return Infinite(normalize_projective([da, db, dc, 0]))


def compose_alternative(p: FrickePoint, q: FrickePoint) -> FrickePoint:
    """Factored form of the finite composition (sigma = 0 only).

    Valid when all coordinate differences and all six coordinates are
    nonzero; agrees with :func:`compose` coordinatewise.
    """
    (a, b, c), (m, n, k) = p.coords, q.coords
    u, v, w = a * n - b * m, a * k - m * c, b * k - c * n
    x = (u * u + v * v) / (3 * a * m * (b - n) * (c - k))
    y = (w * w + u * u) / (3 * b * n * (a - m) * (c - k))
    z = (v * v + w * w) / (3 * c * k * (a - m) * (b - n))
    return FrickePoint(x, y, z)


ONE = FrickePoint(1, 1, 1)


def star(p: FrickePoint, q: FrickePoint) -> ComposeResult:
    """(1,1,1) o (p o q): commutative with identity (1,1,1), not associative."""
    inner = compose(p, q)
    if isinstance(inner, Undefined):
        return inner
    if isinstance(inner, Infinite):
        return Undefined(UNDEFINED_SECANT_AT_INFINITY)
    return compose(ONE, inner.point)


# -- transfers to the projective plane ---------------------------------------


def p2_viete(p: ProjectivePoint, generator: str) -> ProjectivePoint:
    """Viete generators conjugated through phi onto the plane."""
    a, b, c = p.coords
    if generator == "L":
        image = [a * c, a * a + b * b, b * c]
    elif generator == "R":
        image = [b * a, b * b + c * c, a * c]
    else:
        raise ValueError(f"generator must be 'L' or 'R', got {generator!r}")
    if not any(image):
        raise BasePointUndefined(f"{p} is a base point of the transferred map")
    return normalize_projective(image)


def p2_involution(p: ProjectivePoint, which: int) -> ProjectivePoint:
    """The three birational involutions obtained by permuting the transfer."""
    a, b, c = p.coords
    if which == 1:
        image = [a * c, b * c, a * a + b * b]
    elif which == 2:
        image = [b * b + c * c, a * b, a * c]
    elif which == 3:
        image = [a * b, a * a + c * c, c * b]
    else:
        raise ValueError("which must be 1, 2 or 3")
    if not any(image):
        raise UndefinedImage(f"involution {which} is undefined at {p}")
    return normalize_projective(image)


def p2_compose(p: ProjectivePoint, q: ProjectivePoint) -> ProjectivePoint:
    """The secant composition conjugated through phi onto the plane."""
    (a, b, c), (m, n, k) = p.coords, q.coords
    s1 = a * a + b * b + c * c
    s2 = m * m + n * n + k * k
    u, v, w = a * n - b * m, a * k - c * m, b * k - c * n
    image = [
        (s1 * k * n - s2 * b * c) * (u * u + v * v),
        (s1 * k * m - s2 * a * c) * (u * u + w * w),
        (s1 * m * n - s2 * b * a) * (v * v + w * w),
    ]
    if not any(image):
        raise UndefinedImage("transferred composition vanishes identically here")
    return normalize_projective(image)
