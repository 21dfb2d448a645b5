"""Exact multiplier spectra of rational maps.

For each iterate s the spectrum is the monic polynomial M_s whose root
multiset (with multiplicity) lists the multipliers at all d^s + 1 fixed
points of the s-th iterate, the point at infinity included.  Finite fixed
points are handled per irreducible factor q of the fixed-point polynomial:
the multiplier values over the roots of q are the roots of the
characteristic polynomial of (iterate derivative) reduced mod q, computed
exactly through trace power sums.  A fixed point of multiplicity k > 1
contributes multiplier 1 with multiplicity k, which the same construction
produces without special casing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .polynomials import (
    Poly,
    factor_univariate,
    format_poly,
    power_sums,
    squarefree_decompose,
)
from .rational_maps import RationalMap, iterate

ITERATE_DEGREE_BUDGET = 4096
PRECISION_ENV_VAR = "RATDYN_NUMERIC_BITS"
INDETERMINATE_MARGIN = Fraction(1, 2 ** 20)


def _mod_inverse(f: Poly, q: Poly) -> Poly:
    """Inverse of f modulo q over Q; requires gcd(f, q) = 1."""
    r0, r1 = q, f % q
    s0, s1 = Poly.zero(), Poly.one()
    while not r1.is_zero:
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        raise ValueError("element not invertible modulo q")
    return (s0 * (1 / r0.lead)) % q


def _charpoly_of_value(q: Poly, num: Poly, den: Poly) -> Poly:
    """Monic polynomial whose roots are num(alpha)/den(alpha) over the
    roots alpha of the irreducible-or-squarefree monic q."""
    qm = q.monic()
    m = qm.degree
    u = (num % qm) * _mod_inverse(den % qm, qm) % qm
    traces = power_sums(qm, m)
    value_sums = []
    uk = Poly.one()
    for _ in range(m):
        uk = (uk * u) % qm
        value_sums.append(
            sum((c * traces[j] for j, c in enumerate(uk.coeffs)), Fraction(0)))
    elem = [Fraction(1)]
    for k in range(1, m + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * elem[k - i] * value_sums[i - 1]
        elem.append(acc / k)
    return Poly([(-1) ** (m - j) * elem[m - j] for j in range(m + 1)])


def _multiplier_at_infinity(f: RationalMap) -> Fraction:
    chart = f.chart_at_infinity()
    return chart.wronskian()(0) / chart.den(0) ** 2


@dataclass
class _FixedClass:
    locus: Optional[Poly]  # None marks the point at infinity
    multiplicity: int
    factor: Poly  # monic multiplier factor, degree = locus degree (or 1)


def _fixed_point_classes(f: RationalMap) -> list[_FixedClass]:
    """Multiplier factors per irreducible fixed-point locus of f itself."""
    ds = f.degree
    phi = f.fixed_point_numerator()
    out: list[_FixedClass] = []
    if not phi.is_constant:
        deriv = f.derivative()
        for sf, mult in squarefree_decompose(phi):
            for q, _ in factor_univariate(sf):
                out.append(_FixedClass(
                    q, mult, _charpoly_of_value(q, deriv.num, deriv.den)))
    m_inf = ds + 1 - max(phi.degree, 0)
    if m_inf > 0:
        lam = _multiplier_at_infinity(f)
        out.append(_FixedClass(None, m_inf, Poly((-lam, 1))))
    return out


def multiplier_polynomial(a: RationalMap, s: int) -> Poly:
    """Monic M_s of degree d^s + 1 listing the multipliers of the s-th
    iterate at all of its fixed points, counted with multiplicity."""
    if a.degree < 2:
        raise ValueError("multiplier spectrum needs degree >= 2")
    if s < 1:
        raise ValueError("iterate index must be >= 1")
    if a.degree ** s > ITERATE_DEGREE_BUDGET:
        raise ValueError(
            f"d^s = {a.degree ** s} above budget {ITERATE_DEGREE_BUDGET}")
    f = iterate(a, s)
    acc = Poly.one()
    total = 0
    for cls in _fixed_point_classes(f):
        acc = acc * cls.factor ** cls.multiplicity
        total += cls.factor.degree * cls.multiplicity
    if total != f.degree + 1:
        raise RuntimeError("multiplier count mismatch")
    return acc


@dataclass
class MultiplierSpectrum:
    """Lazy per-iterate multiplier polynomials of one map."""

    map: RationalMap
    per_iterate: dict[int, Poly] = field(default_factory=dict)

    def polynomial(self, s: int) -> Poly:
        if s not in self.per_iterate:
            self.per_iterate[s] = multiplier_polynomial(self.map, s)
        return self.per_iterate[s]


def isospectral(a: RationalMap, b: RationalMap, s_max: int) -> bool:
    """Exact equality of M_s for all s <= s_max."""
    if a.degree != b.degree:
        raise ValueError("isospectral maps must share a degree")
    return all(
        multiplier_polynomial(a, s) == multiplier_polynomial(b, s)
        for s in range(1, s_max + 1)
    )


@dataclass
class FixedPointRecord:
    locus: str
    multiplier_factor: str
    multiplicity: int
    character: str
    exact: bool
    multiplier: Optional[Fraction] = None


def classify_fixed_points(
    a: RationalMap, precision_bits: Optional[int] = None
) -> list[FixedPointRecord]:
    """Attracting / repelling / indifferent per fixed-point class of a.

    Rational multipliers are classified exactly; irrational ones go through
    mpmath at the configured precision and are flagged inexact, reporting
    "indeterminate" whenever any |multiplier| sits within 2^-20 of 1.
    """
    if a.degree < 2:
        raise ValueError("classification needs degree >= 2")
    bits = precision_bits or int(os.environ.get(PRECISION_ENV_VAR, "64"))
    records = []
    for cls in _fixed_point_classes(a):
        locus = "inf" if cls.locus is None else format_poly(cls.locus)
        factor = cls.factor
        if factor.degree == 1:
            lam = -factor.coeff(0)
            size = abs(lam)
            if size < 1:
                character = "attracting"
            elif size == 1:
                character = "indifferent"
            else:
                character = "repelling"
            records.append(FixedPointRecord(
                locus, format_poly(factor, "w"), cls.multiplicity,
                character, True, lam))
            continue
        characters = set()
        with mpmath.workprec(bits):
            roots = mpmath.polyroots(
                [mpmath.mpf(c.numerator) / mpmath.mpf(c.denominator)
                 for c in reversed(factor.coeffs)],
                maxsteps=200, extraprec=bits)
            for root in roots:
                size = abs(root)
                if abs(size - 1) < float(INDETERMINATE_MARGIN):
                    characters.add("indeterminate")
                elif size < 1:
                    characters.add("attracting")
                else:
                    characters.add("repelling")
        character = characters.pop() if len(characters) == 1 else "mixed:" + ",".join(
            sorted(characters))
        records.append(FixedPointRecord(
            locus, format_poly(factor, "w"), cls.multiplicity, character, False))
    return records


def fixed_point_transport_ok(
    a: RationalMap, x: RationalMap, b: RationalMap
) -> bool:
    """Check that x carries every rational fixed point of b to a fixed
    point of a with the same multiplier (semiconjugacy transport)."""
    from .polynomials import rational_roots

    phi_b = b.fixed_point_numerator()
    wron_b, den2_b = b.wronskian(), b.den * b.den
    wron_a, den2_a = a.wronskian(), a.den * a.den
    ok = True
    if not phi_b.is_constant:
        for root, _ in rational_roots(phi_b):
            image = x(root)
            if image.is_infinity:
                ok = ok and a(image) == image
                continue
            value = a(image)
            if value != image:
                return False
            lam_b = wron_b(root) / den2_b(root)
            lam_a = wron_a(image.value) / den2_a(image.value)
            size_b, size_a = abs(lam_b), abs(lam_a)
            same = (
                (size_b < 1 and size_a < 1)
                or (size_b == 1 and size_a == 1)
                or (size_b > 1 and size_a > 1)
            )
            ok = ok and same
    return ok
