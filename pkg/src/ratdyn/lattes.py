"""Lattes maps realised algebraically: multiplication and isogeny x-maps
on elliptic curves over Q, plus the power and Chebyshev families.

Everything stays inside Q: a curve y^2 = x^3 + a x + b stands in for a
rank-two lattice, division polynomials give the multiplication-by-n map on
x-coordinates, and Velu's formulas give the x-map of a quotient isogeny.
The degree-2 orbifold marked on the three branch points and infinity is
carried along and every constructed map is verified to cover it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .decomposition import outer_solve
from .orbifolds import Orbifold, induced_orbifold, is_covering
from .polynomials import (
    Poly,
    as_scalar,
    factor_univariate,
    format_poly,
    rational_roots,
    squarefree_part,
)
from .rational_maps import INFINITY, RationalMap, compose


@dataclass(frozen=True)
class EllipticCurve:
    """Short Weierstrass curve y^2 = x^3 + a x + b over Q."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "b", as_scalar(self.b))
        if 4 * self.a ** 3 + 27 * self.b ** 2 == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0")

    def rhs(self) -> Poly:
        """x^3 + a x + b, the branch polynomial of the x-line double cover."""
        return Poly((self.b, self.a, 0, 1))

    def __repr__(self) -> str:
        return f"EllipticCurve(a={self.a}, b={self.b})"


def lattes_orbifold(curve: EllipticCurve) -> Orbifold:
    """The four branch points (roots of the cubic plus infinity), all with
    ramification value 2: the signature-(2,2,2,2) orbifold of the curve."""
    return Orbifold([(curve.rhs(), 2), (INFINITY, 2)])


def division_polynomials(curve: EllipticCurve, n: int) -> list[Poly]:
    """The division polynomials psi_1 .. psi_n reduced to Q[x].

    Convention: entries of even index carry an implicit factor y that has
    been stripped, with y^2 rewritten as x^3 + a x + b wherever it arises;
    in particular the stored psi_2 is the constant 2 and psi_2 squared is
    the polynomial 4(x^3 + a x + b).  Roots of the stored psi_n (together
    with the cubic's roots when n is even) are exactly the x-coordinates
    of the nonzero n-torsion points.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    a, b = curve.a, curve.b
    f = curve.rhs()
    f2 = f * f
    w: dict[int, Poly] = {
        0: Poly.zero(),
        1: Poly.one(),
        2: Poly.constant(2),
        3: Poly((-a * a, 12 * b, 6 * a, 0, 3)),
        4: Poly((
            -8 * b * b - a ** 3, -4 * a * b, -5 * a * a, 20 * b, 5 * a, 0, 1,
        )) * 4,
    }

    def psi(k: int) -> Poly:
        if k not in w:
            m = k // 2
            if k % 2 == 1:
                if m % 2 == 0:
                    w[k] = f2 * psi(m + 2) * psi(m) ** 3 - psi(m - 1) * psi(m + 1) ** 3
                else:
                    w[k] = psi(m + 2) * psi(m) ** 3 - f2 * psi(m - 1) * psi(m + 1) ** 3
            else:
                diff = psi(m + 2) * psi(m - 1) ** 2 - psi(m - 2) * psi(m + 1) ** 2
                w[k] = (psi(m) * diff) * Fraction(1, 2)
        return w[k]

    return [psi(k) for k in range(1, n + 1)]


@dataclass(frozen=True)
class LattesMap:
    """x-coordinate action of multiplication by n on an elliptic curve."""

    map: RationalMap
    curve: EllipticCurve
    scale: int
    orb: Orbifold
    ell: int = 2

    def __repr__(self) -> str:
        return (f"LattesMap(n={self.scale}, curve=({self.curve.a}, "
                f"{self.curve.b}), degree={self.map.degree})")


def multiplication_map(curve: EllipticCurve, n: int) -> LattesMap:
    """The degree-n^2 rational map x([n]P) as a function of x(P), verified
    to be a covering self-map of the curve's (2,2,2,2) orbifold."""
    if n < 2:
        raise ValueError("need n >= 2")
    psis = division_polynomials(curve, n + 1)
    w_prev, w_n, w_next = psis[n - 2], psis[n - 1], psis[n]
    f = curve.rhs()
    if n % 2 == 1:
        num = Poly.x() * w_n ** 2 - f * w_prev * w_next
        den = w_n ** 2
    else:
        num = Poly.x() * f * w_n ** 2 - w_prev * w_next
        den = f * w_n ** 2
    xmap = RationalMap(num, den)
    if xmap.degree != n * n:
        raise RuntimeError("multiplication map degree bookkeeping failed")
    orb = lattes_orbifold(curve)
    check = is_covering(xmap, orb, orb)
    if not check:
        raise RuntimeError(
            "multiplication map is not a self-covering: "
            + "; ".join(check.failures))
    return LattesMap(xmap, curve, n, orb)


# ---------------------------------------------------------------------------
# Isogenies
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsogenyData:
    """An isogeny's x-coordinate data.

    kernel lists every affine kernel x-coordinate with multiplicity (the
    square of the radical for odd kernels), so deg xmap = deg kernel + 1.
    """

    source: EllipticCurve
    target: EllipticCurve
    kernel: Poly
    xmap: RationalMap
    degree: int


def _trace_over_roots(g: Poly, h: Poly) -> Fraction:
    """Sum of g over the roots of monic squarefree h, via power sums."""
    from .polynomials import power_sums

    sums = power_sums(h, g.degree + 1)
    return sum((c * sums[j] for j, c in enumerate(g.coeffs)), Fraction(0))


def velu_isogeny(curve: EllipticCurve, kernel: Poly) -> IsogenyData:
    """Quotient isogeny with the given kernel polynomial, by Velu's formulas.

    Desk scope: a rational two-torsion kernel x - x0, or an odd-order
    kernel given by its x-coordinate polynomial (either the squarefree
    radical or its square are accepted).  The trivial kernel 1 yields the
    identity isogeny.  The output is certified by the exact identity
    xmap o doubling = doubling' o xmap; failure raises ValueError.
    """
    kernel = kernel.monic() if not kernel.is_zero else kernel
    if kernel.is_zero:
        raise ValueError("kernel must be nonzero")
    if kernel.is_constant:
        return IsogenyData(curve, curve, Poly.one(), RationalMap.identity(), 1)
    h = squarefree_part(kernel)
    a, b = curve.a, curve.b
    f = curve.rhs()
    if h.degree == 1 and f(-h.coeff(0)) == 0:
        if kernel != h:
            raise ValueError("a two-torsion kernel enters once, not squared")
        x0 = -h.coeff(0)
        t_sum = 3 * x0 * x0 + a
        w_sum = x0 * t_sum
        xmap = RationalMap(Poly((t_sum, -x0, 1)), h)
        target = EllipticCurve(a - 5 * t_sum, b - 7 * w_sum)
        degree = 2
        stored_kernel = h
    else:
        if kernel != h and kernel != h * h:
            raise ValueError("kernel must be the radical or its square")
        d = h.degree
        ell = 2 * d + 1
        torsion = division_polynomials(curve, ell)[ell - 1]
        if not (torsion % h).is_zero:
            raise ValueError("kernel is not a torsion divisor")
        t_poly = Poly((2 * a, 0, 6))       # 6x^2 + 2a
        u_poly = f * 4                      # 4f
        hp = h.derivative()
        t1 = (t_poly * hp) % h
        u1 = (u_poly * hp) % h
        t_sum = _trace_over_roots(t_poly, h)
        w_sum = _trace_over_roots(u_poly + Poly.x() * t_poly, h)
        num = Poly.x() * h * h + t1 * h + (u1 * hp - u1.derivative() * h)
        xmap = RationalMap(num, h * h)
        target = EllipticCurve(a - 5 * t_sum, b - 7 * w_sum)
        degree = ell
        stored_kernel = h * h
    if xmap.degree != degree:
        raise ValueError("kernel is not a torsion divisor (degree drop)")
    _certify_isogeny(curve, target, xmap)
    return IsogenyData(curve, target, stored_kernel, xmap, degree)


def _doubling_map(curve: EllipticCurve) -> RationalMap:
    a, b = curve.a, curve.b
    num = Poly((a * a, -8 * b, -2 * a, 0, 1))
    return RationalMap(num, curve.rhs() * 4)


def _certify_isogeny(source, target, xmap) -> None:
    left = compose(xmap, _doubling_map(source))
    right = compose(_doubling_map(target), xmap)
    if left != right:
        raise ValueError(
            "kernel is not a torsion divisor (isogeny fails to commute "
            "with doubling)")


def dual_isogeny(iso: IsogenyData, n: int) -> IsogenyData:
    """The dual x-map: the unique X with X o iso.xmap = multiplication by n
    on the source, found by the exact outer linear solve."""
    if iso.degree == 1:
        raise ValueError(
            "trivial isogeny has no proper dual: the intermediate lattice "
            "must differ from both ends of the chain")
    if n != iso.degree:
        raise ValueError("chain bookkeeping requires n = deg(iso)")
    mult = multiplication_map(iso.source, n)
    dual = outer_solve(mult.map, iso.xmap)
    if dual is None:
        raise ValueError("no dual found: inconsistent kernel data")
    degree = n * n // iso.degree
    if dual.degree != degree:
        raise RuntimeError("dual degree bookkeeping failed")
    kernel = dual.den.monic()
    return IsogenyData(iso.target, iso.source, kernel, dual, degree)


# ---------------------------------------------------------------------------
# Mutually semiconjugate pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MutualPair:
    """Multiplication maps on a curve and its quotient, intertwined by an
    isogeny x-map and its dual; the commuting tower is verified exactly."""

    on_source: LattesMap          # multiplication by m on the source curve
    on_target: LattesMap          # multiplication by m on the quotient
    outer: RationalMap            # dual x-map, target -> source
    inner: RationalMap            # isogeny x-map, source -> target
    isogeny: IsogenyData
    dual: IsogenyData


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def build_mutual_pair(curve: EllipticCurve, n: int, m: int) -> MutualPair:
    """Degree-n isogeny tower around multiplication by m: inner o A_m =
    A_m' o inner, outer o A_m' = A_m o outer, outer o inner = A_n.

    Desk scope: n = 2 with a rational two-torsion point on the curve.
    """
    if not (_is_prime(n) and _is_prime(m)) or n == m:
        raise ValueError("n and m must be distinct primes")
    if n != 2:
        raise NotImplementedError("isogeny chains are built for n = 2")
    roots = rational_roots(curve.rhs())
    if not roots:
        raise ValueError("curve has no rational two-torsion point")
    x0 = roots[0][0]
    iso = velu_isogeny(curve, Poly((-x0, 1)))
    dual = dual_isogeny(iso, n)
    a_m_source = multiplication_map(curve, m)
    a_m_target = multiplication_map(iso.target, m)
    a_n_source = multiplication_map(curve, n)
    if compose(iso.xmap, a_m_source.map) != compose(a_m_target.map, iso.xmap):
        raise RuntimeError("inner square of the tower fails to commute")
    if compose(dual.xmap, a_m_target.map) != compose(a_m_source.map, dual.xmap):
        raise RuntimeError("outer square of the tower fails to commute")
    if compose(dual.xmap, iso.xmap) != a_n_source.map:
        raise RuntimeError("isogeny and dual do not compose to multiplication")
    induced = induced_orbifold(a_m_source.orb, iso.xmap)
    if induced != a_m_target.orb:
        raise RuntimeError("induced orbifold differs from the quotient's")
    if induced.signature() != (2, 2, 2, 2):
        raise RuntimeError("induced orbifold has the wrong signature")
    return MutualPair(a_m_source, a_m_target, dual.xmap, iso.xmap, iso, dual)


# ---------------------------------------------------------------------------
# Power and Chebyshev families
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def chebyshev_poly(n: int) -> Poly:
    """T_n with T_n(cos t) = cos(n t), by the three-term recurrence."""
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return Poly.one()
    if n == 1:
        return Poly.x()
    prev, cur = Poly.one(), Poly.x()
    two_x = Poly((0, 2))
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def chebyshev(n: int) -> RationalMap:
    if n < 1:
        raise ValueError("need n >= 1")
    return RationalMap(chebyshev_poly(n))


def power_map(n: int) -> RationalMap:
    """z^n for n >= 2, or 1/z^|n| for n <= -2."""
    if abs(n) < 2:
        raise ValueError("need |n| >= 2")
    if n > 0:
        return RationalMap(Poly.monomial(n))
    return RationalMap(Poly.one(), Poly.monomial(-n))


# ---------------------------------------------------------------------------
# Multiplier formula check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultiplierFormulaReport:
    """Per-branch-factor verdicts that the multiplication map has derivative
    congruent to n^2 at the two-torsion fixed points."""

    applicable: bool
    expected: int
    entries: tuple[tuple[str, bool], ...]

    @property
    def ok(self) -> bool:
        return self.applicable and all(flag for _, flag in self.entries)


def check_multiplier_formula(lat: LattesMap) -> MultiplierFormulaReport:
    """For odd scale n the two-torsion x-coordinates are fixed points with
    ramification value 2, so the multiplier there must be exactly n^2;
    checked modulo each irreducible factor of the branch cubic."""
    n = lat.scale
    expected = n * n
    if n % 2 == 0:
        return MultiplierFormulaReport(False, expected, ())
    deriv = lat.map.derivative()
    target = deriv.num - expected * deriv.den
    entries = []
    for q, _ in factor_univariate(lat.curve.rhs()):
        entries.append((format_poly(q), (target % q).is_zero))
    return MultiplierFormulaReport(True, expected, tuple(entries))
