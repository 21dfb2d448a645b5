"""Rational self-maps of the projective line over Q.

A map is a coprime pair num/den of polynomials in canonical scale: the
denominator is monic when nonconstant and exactly 1 otherwise, so equality
is a plain coefficient comparison.  Composition, iteration, derivatives,
Moebius conjugation and local-degree bookkeeping all stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .polynomials import (
    Poly,
    Scalar,
    as_scalar,
    format_poly,
    poly_gcd,
    squarefree_decompose,
)


class DegenerateMapError(ValueError):
    """Raised when a construction would yield a constant map."""


@dataclass(frozen=True)
class Point:
    """A rational point of the projective line; value None marks infinity."""

    value: Optional[Fraction]

    @staticmethod
    def of(x: Union["Point", Fraction, int, str]) -> "Point":
        if isinstance(x, Point):
            return x
        return Point(as_scalar(x))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __repr__(self) -> str:
        return "Point(inf)" if self.is_infinity else f"Point({self.value})"


INFINITY = Point(None)


class RationalMap:
    """Non-constant rational function on P^1 with exact coefficients."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _trusted: bool = False):
        num = num if isinstance(num, Poly) else Poly.constant(num) if isinstance(
            num, (int, Fraction)) else Poly(num)
        den = den if isinstance(den, Poly) else Poly.constant(den) if isinstance(
            den, (int, Fraction)) else Poly(den)
        if den.is_zero:
            raise DegenerateMapError("zero denominator")
        if num.is_zero:
            raise DegenerateMapError("the zero map is constant")
        if not _trusted and not num.is_constant and not den.is_constant:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if max(num.degree, den.degree) < 1:
            raise DegenerateMapError("constant map rejected")
        scale = 1 / den.lead
        object.__setattr__(self, "num", num * scale)
        object.__setattr__(self, "den", den * scale)

    # -- identity-like constructors --------------------------------------

    @staticmethod
    def identity() -> "RationalMap":
        return RationalMap(Poly.x())

    @staticmethod
    def from_poly(p: Poly) -> "RationalMap":
        return RationalMap(p)

    # -- queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalMap):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def key(self) -> tuple:
        """Deterministic sort key (degree, then coefficients)."""
        return (self.degree, self.num.coeffs, self.den.coeffs)

    def __repr__(self) -> str:
        return f"RationalMap({self})"

    def __str__(self) -> str:
        if self.is_polynomial:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"

    # -- evaluation ---------------------------------------------------------

    def __call__(self, point) -> Point:
        point = Point.of(point)
        if point.is_infinity:
            dp, dq = self.num.degree, self.den.degree
            if dp > dq:
                return INFINITY
            if dp < dq:
                return Point(Fraction(0))
            return Point(self.num.lead / self.den.lead)
        qv = self.den(point.value)
        if qv == 0:
            return INFINITY
        return Point(self.num(point.value) / qv)

    # -- structural helpers ----------------------------------------------

    def preimage_numerator(self, s: Poly) -> Poly:
        """Numerator of s(self(z)): the pullback polynomial of the locus s."""
        if s.is_zero:
            raise ValueError("pullback of the zero polynomial")
        return s.homogeneous_eval(self.num, self.den)

    def fixed_point_numerator(self) -> Poly:
        """Numerator of self(z) - z; roots are the finite fixed points."""
        return self.num - self.den.shift(1)

    def wronskian(self) -> Poly:
        """num' den - num den'; vanishing divisor = finite critical points."""
        return self.num.derivative() * self.den - self.num * self.den.derivative()

    def chart_at_infinity(self) -> "RationalMap":
        """Conjugate by 1/z, moving infinity to the origin."""
        inv = RationalMap(Poly.one(), Poly.x())
        return compose(inv, compose(self, inv))

    def local_degree(self, point) -> int:
        """Ramification index of the map at the given rational point."""
        point = Point.of(point)
        if point.is_infinity:
            return self.chart_at_infinity().local_degree(Point(Fraction(0)))
        value = self(point)
        if value.is_infinity:
            return self.den.multiplicity_of_root(point.value)
        return (self.num - value.value * self.den).multiplicity_of_root(point.value)

    def critical_divisor(self) -> list[tuple[Union[Poly, Point], int]]:
        """Critical points as squarefree loci with weights e - 1.

        Finite loci come from the Wronskian; infinity is analysed in the
        1/z chart.  Weights always total 2 deg - 2.
        """
        if self.degree < 2:
            raise ValueError("critical divisor needs degree >= 2")
        out: list[tuple[Union[Poly, Point], int]] = []
        w = self.wronskian()
        total = 0
        if not w.is_constant:
            for factor, mult in squarefree_decompose(w):
                out.append((factor, mult))
                total += factor.degree * mult
        e_inf = self.local_degree(INFINITY)
        if e_inf >= 2:
            out.append((INFINITY, e_inf - 1))
            total += e_inf - 1
        if total != 2 * self.degree - 2:
            raise RuntimeError("ramification count violates Riemann-Hurwitz")
        return out

    def derivative(self) -> "RationalMap":
        """The derivative as an exact rational map."""
        w = self.wronskian()
        if w.is_zero:
            raise DegenerateMapError("derivative of a constant map")
        if w.is_constant and self.den.is_constant:
            raise DegenerateMapError("derivative of an affine map is constant")
        return RationalMap(w, self.den * self.den)


def compose(outer: RationalMap, inner: RationalMap) -> RationalMap:
    """outer(inner(z)), exact and coprime by construction."""
    r, s = inner.num, inner.den
    n = outer.num.homogeneous_eval(r, s)
    d = outer.den.homogeneous_eval(r, s)
    dp, dq = outer.num.degree, outer.den.degree
    if dp < dq:
        n = n * s ** (dq - dp)
    elif dq < dp:
        d = d * s ** (dp - dq)
    result = RationalMap(n, d, _trusted=True)
    if result.degree != outer.degree * inner.degree:
        raise RuntimeError("composition degree mismatch; inputs not coprime?")
    return result


def iterate(a: RationalMap, s: int) -> RationalMap:
    """The s-th iterate a o a o ... o a."""
    if s < 1:
        raise ValueError("iterate count must be >= 1")
    result = None
    base = a
    while s:
        if s & 1:
            result = base if result is None else compose(result, base)
        s >>= 1
        if s:
            base = compose(base, base)
    return result


@dataclass(frozen=True)
class Mobius:
    """Invertible map (a z + b)/(c z + d) with rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.det == 0:
            raise ValueError("singular Moebius matrix")

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @staticmethod
    def identity() -> "Mobius":
        return Mobius(1, 0, 0, 1)

    def inverse(self) -> "Mobius":
        return Mobius(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def as_map(self) -> RationalMap:
        return RationalMap(Poly((self.b, self.a)), Poly((self.d, self.c)))

    def apply(self, point) -> Point:
        point = Point.of(point)
        if point.is_infinity:
            if self.c == 0:
                return INFINITY
            return Point(self.a / self.c)
        z = point.value
        lower = self.c * z + self.d
        if lower == 0:
            return INFINITY
        return Point((self.a * z + self.b) / lower)

    @staticmethod
    def through_points(sources, targets) -> "Mobius":
        """The unique Moebius sending three distinct points to three others."""
        ms = _to_zero_one_inf(*[Point.of(p) for p in sources])
        mt = _to_zero_one_inf(*[Point.of(p) for p in targets])
        return mt.inverse() @ ms


def _to_zero_one_inf(p1: Point, p2: Point, p3: Point) -> Mobius:
    """Moebius sending (p1, p2, p3) to (0, 1, inf)."""
    if len({p1, p2, p3}) != 3:
        raise ValueError("points must be distinct")
    if p1.is_infinity:
        # z -> (p2 - p3)/(z - p3)
        return Mobius(0, p2.value - p3.value, 1, -p3.value)
    if p2.is_infinity:
        # z -> (z - p1)/(z - p3)
        return Mobius(1, -p1.value, 1, -p3.value)
    if p3.is_infinity:
        # z -> (z - p1)/(p2 - p1)
        return Mobius(1, -p1.value, 0, p2.value - p1.value)
    return Mobius(
        p2.value - p3.value,
        -p1.value * (p2.value - p3.value),
        p2.value - p1.value,
        -p3.value * (p2.value - p1.value),
    )


def conjugate(a: RationalMap, mu: Mobius) -> RationalMap:
    """mu^-1 o a o mu; the convention used throughout the package."""
    return compose(mu.inverse().as_map(), compose(a, mu.as_map()))


def common_iterate(
    a: RationalMap, b: RationalMap, s_max: int, k_max: int
) -> Optional[tuple[int, int]]:
    """Least (s, k), ordered lexicographically, with a^s = b^k exactly."""
    if s_max < 1 or k_max < 1:
        raise ValueError("iteration bounds must be >= 1")
    a_pows = [iterate(a, s) for s in range(1, s_max + 1)]
    b_pows = [iterate(b, k) for k in range(1, k_max + 1)]
    for s, ap in enumerate(a_pows, start=1):
        for k, bp in enumerate(b_pows, start=1):
            if ap.degree != bp.degree:
                continue
            if ap == bp:
                return (s, k)
    return None
