"""Quadric sections y = n0 of the Fricke surface.

A section is the conic x^2 + n0^2 + z^2 = 3*x*n0*z in the (x,z) plane.
With a base point O = (m0, k0) it carries a commutative group law: A + B
is the second intersection with the conic of the line through O parallel
to the chord AB.  The module also covers the points at infinity (minus
continued fractions), the dihedral integral transforms, and their
Chebyshev-like closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    AT_INFINITY,
    DomainError,
    Rat,
    Slope,
    is_rational_square,
    slope_between,
    sqrt_exact,
    surface_defect,
)


class OffSection(DomainError):
    pass


class DenominatorVanishes(DomainError):
    """The chord is parallel to an asymptote; the sum is at infinity."""


class IndexZero(DomainError):
    pass


@dataclass(frozen=True, slots=True)
class SectionFrame:
    """A section plane y = n0 together with the base point O = (m0, k0)."""

    m0: Fraction
    n0: Fraction
    k0: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "m0", Fraction(self.m0))
        object.__setattr__(self, "n0", Fraction(self.n0))
        object.__setattr__(self, "k0", Fraction(self.k0))
        if surface_defect("fricke", (self.m0, self.n0, self.k0)) != 0:
            raise OffSection(f"({self.m0}, {self.n0}, {self.k0}) is not on the surface")
        if self.n0 == 0:
            raise OffSection("n0 = 0 degenerates the section")

    @property
    def origin(self) -> "SectionPoint":
        return SectionPoint(self.m0, self.k0, self)

    @property
    def is_fundamental(self) -> bool:
        """Positive integral triple whose middle entry is the maximum."""
        triple = (self.m0, self.n0, self.k0)
        return (
            all(v.denominator == 1 and v > 0 for v in triple)
            and self.n0 == max(triple)
        )

    def contains(self, x: Rat, z: Rat) -> bool:
        return surface_defect("fricke", (x, self.n0, z)) == 0


@dataclass(frozen=True, slots=True)
class SectionPoint:
    x: Fraction
    z: Fraction
    frame: SectionFrame

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "z", Fraction(self.z))
        if not self.frame.contains(self.x, self.z):
            raise OffSection(f"({self.x}, {self.z}) is not on the section")

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.z)


def solve_z(frame: SectionFrame, x: Rat) -> list[SectionPoint]:
    """All rational z with (x, z) on the section: 0, 1 or 2 points.

    Empty when the discriminant 9*x^2*n0^2 - 4*(n0^2 + x^2) is not the
    square of a rational.
    """
    x = Fraction(x)
    n0 = frame.n0
    disc = 9 * x * x * n0 * n0 - 4 * (n0 * n0 + x * x)
    if disc < 0 or not is_rational_square(disc):
        return []
    root = sqrt_exact(disc)
    if root == 0:
        return [SectionPoint(x, 3 * x * n0 / 2, frame)]
    return [
        SectionPoint(x, (3 * x * n0 - root) / 2, frame),
        SectionPoint(x, (3 * x * n0 + root) / 2, frame),
    ]


def infinity_points(frame: SectionFrame):
    """The two slopes t = (3*n0 +- sqrt(9*n0^2 - 4)) / 2 at infinity.

    Quadratic irrationals in general; a pair of rationals when the
    radicand happens to be a rational square.
    """
    n0 = frame.n0
    disc = 9 * n0 * n0 - 4
    root = sqrt_exact(disc)
    lo = (3 * n0 - root) * Fraction(1, 2)
    hi = (3 * n0 + root) * Fraction(1, 2)
    return (lo, hi)


# -- Chebyshev-like recurrence -------------------------------------------------


def chebyshev_b(r: int, n0: Rat) -> Fraction:
    """b_r(n0) with b_0 = 1, b_1 = 3*n0, b_{r+2} = 3*n0*b_{r+1} - b_r.

    Indices -1 and -2 (values 0 and -1) are admitted: they are forced by
    running the recurrence backwards and are needed by the closed-form
    dihedral powers at small r.
    """
    if r < -2:
        raise IndexZero(f"index {r} below the supported range")
    n0 = Fraction(n0)
    prev, cur = Fraction(-1), Fraction(0)  # b_{-2}, b_{-1}
    for _ in range(r + 2):
        prev, cur = cur, 3 * n0 * cur - prev
    return prev


def cf_convergent(frame: SectionFrame, r: int) -> Fraction:
    """r-th convergent b_r/b_{r-1} of the minus continued fraction
    ceil(3*n0 : 3*n0 : ...) converging to the larger point at infinity."""
    if r < 1:
        raise IndexZero("convergents are indexed from 1")
    return chebyshev_b(r, frame.n0) / chebyshev_b(r - 1, frame.n0)


# -- the group law -------------------------------------------------------------


def _chord_add(frame: SectionFrame, mu: Slope) -> SectionPoint:
    """Second intersection with the section of the line through O with slope mu."""
    m0, n0, k0 = frame.m0, frame.n0, frame.k0
    if mu is AT_INFINITY:
        return SectionPoint(m0, 3 * n0 * m0 - k0, frame)
    den = 1 + mu * mu - 3 * n0 * mu
    if den == 0:
        raise DenominatorVanishes("chord parallel to an asymptote; sum at infinity")
    x = (mu * mu * m0 - m0 - 2 * mu * k0 + 3 * n0 * k0) / den
    z = (k0 - 2 * m0 * mu - mu * mu * k0 + 3 * m0 * n0 * mu * mu) / den
    return SectionPoint(x, z, frame)


def tangent_slope(frame: SectionFrame, p: SectionPoint) -> Slope:
    """Slope of the tangent line to the section at p."""
    num = 2 * p.x - 3 * frame.n0 * p.z
    den = 2 * p.z - 3 * frame.n0 * p.x
    if den == 0:
        return AT_INFINITY
    return -num / den

def quadric_add(frame: SectionFrame, p1: SectionPoint, p2: SectionPoint) -> SectionPoint:
    """The conic group law with neutral element O."""
    if p1.xy == p2.xy:
        return quadric_double(frame, p1)
    return _chord_add(frame, slope_between(p1.xy, p2.xy))


def quadric_double(frame: SectionFrame, p: SectionPoint) -> SectionPoint:
    """P + P, via the chord through O parallel to the tangent at P."""
    return _chord_add(frame, tangent_slope(frame, p))


def quadric_inverse(frame: SectionFrame, p: SectionPoint) -> SectionPoint:
    """The unique S with P + S = O.

    Second intersection with the section of the line through P parallel
    to the tangent at O.  When that tangent is vertical the computation
    runs in the (z, x)-swapped frame, which is legitimate by the symmetry
    of the section equation.
    """
    m0, n0, k0 = frame.m0, frame.n0, frame.k0
    mu = tangent_slope(frame, frame.origin)
    if mu is AT_INFINITY:
        swapped = SectionFrame(k0, n0, m0)
        mirror = quadric_inverse(swapped, SectionPoint(p.z, p.x, swapped))
        return SectionPoint(mirror.z, mirror.x, frame)
    # quadratic in x along z = mu*x + w; one root is x1, the sum of the
    # roots gives the other
    w = p.z - mu * p.x
    den = 1 + mu * mu - 3 * n0 * mu
    if den == 0:
        raise DenominatorVanishes("tangent at O parallel to an asymptote")
    x = -(2 * mu - 3 * n0) * w / den - p.x
    z = mu * (x - p.x) + p.z
    return SectionPoint(x, z, frame)


# -- dihedral transforms -------------------------------------------------------

_DIHEDRAL = ("A", "TA", "C", "TC", "B", "T")


def dihedral(frame: SectionFrame, p: SectionPoint, which: str) -> SectionPoint:
    """The integral transforms A, TA, C, TC, B, T of the section.

    A and T are involutions, C = T*A*T, and <A, T> is the infinite
    dihedral group; every image of an integral point is integral.
    """
    n0 = frame.n0
    m, k = p.x, p.z
    if which == "A":
        image = (m, 3 * m * n0 - k)
    elif which == "TA":
        image = (3 * m * n0 - k, m)
    elif which == "C":
        image = (3 * n0 * k - m, k)
    elif which == "TC":
        image = (k, 3 * n0 * k - m)
    elif which == "B":
        image = (-m, -k)
    elif which == "T":
        image = (k, m)
    else:
        raise ValueError(f"transform must be one of {_DIHEDRAL}, got {which!r}")
    return SectionPoint(image[0], image[1], frame)


def ta_power(frame: SectionFrame, p: SectionPoint, r: int, family: str = "TA") -> SectionPoint:
    """Closed form of the r-th power of TA (or TC) via the b_r recurrence."""
    if r < 0:
        raise IndexZero("powers are defined for r >= 0")
    if family not in ("TA", "TC"):
        raise ValueError(f"family must be 'TA' or 'TC', got {family!r}")
    n0 = frame.n0
    br = chebyshev_b(r, n0)
    br1 = chebyshev_b(r - 1, n0)
    br2 = chebyshev_b(r - 2, n0)
    m, k = p.x, p.z
    if family == "TA":
        return SectionPoint(m * br - k * br1, m * br1 - k * br2, frame)
    # TC is the matrix [[0, 1], [-1, 3*n0]]; its r-th power puts b_r in the
    # lower right, so the coordinate order is the mirror of the TA case
    return SectionPoint(k * br1 - m * br2, k * br - m * br1, frame)
