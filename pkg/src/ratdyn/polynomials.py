"""Exact univariate and bivariate polynomial arithmetic over the rationals.

Coefficients are `fractions.Fraction` throughout; nothing here ever rounds.
Heavy kernels (multiplication, gcd, resultants) clear denominators and work
over the integers, which keeps Fraction normalisation off the hot path.
Irreducible factorisation is delegated to sympy's ZZ/QQ engines; everything
a factorisation claims is cheap to verify by multiplying back, and the test
suite does exactly that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence, Union

import sympy

Scalar = Fraction

_SYM_X = sympy.Symbol("x")
_SYM_Y = sympy.Symbol("y")


def as_scalar(value) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to an exact Scalar."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _ilcm(a: int, b: int) -> int:
    return a // _igcd(a, b) * b


class Poly:
    """Dense univariate polynomial over Q.

    Coefficients are stored low degree first; the zero polynomial is the
    empty tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def constant(c) -> "Poly":
        return Poly((as_scalar(c),))

    @staticmethod
    def monomial(degree: int, c=1) -> "Poly":
        return Poly((0,) * degree + (as_scalar(c),))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        return Poly(a + b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        return Poly(a - b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            if c == 0:
                return Poly.zero()
            return Poly(a * c for a in self.coeffs)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly.zero()
        # Integer convolution: clear denominators once, multiply in ZZ.
        za, da = self._zz()
        zb, db = other._zz()
        out = [0] * (len(za) + len(zb) - 1)
        for i, a in enumerate(za):
            if a:
                for j, b in enumerate(zb):
                    if b:
                        out[i + j] += a * b
        d = da * db
        return Poly(Fraction(c, d) for c in out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _zz(self) -> tuple[list[int], int]:
        """Integer coefficient list and the common denominator cleared."""
        d = 1
        for c in self.coeffs:
            d = _ilcm(d, c.denominator)
        return [int(c * d) for c in self.coeffs], d

    # -- division ------------------------------------------------------

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(), self
        rem = list(self.coeffs)
        dn, dd = other.degree, other.lead
        quo = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - dn - 1, -1, -1):
            f = rem[i + dn] / dd
            if f:
                quo[i] = f
                for j, c in enumerate(other.coeffs):
                    rem[i + j] -= f * c
        return Poly(quo), Poly(rem[:dn])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        quo, rem = divmod(self, other)
        if not rem.is_zero:
            raise ValueError("inexact polynomial division")
        return quo

    def divides(self, other: "Poly") -> bool:
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    # -- calculus and evaluation ----------------------------------------

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __call__(self, point):
        """Evaluate by Horner; accepts Fraction-likes or Poly arguments."""
        if isinstance(point, Poly):
            acc = Poly.zero()
            for c in reversed(self.coeffs):
                acc = acc * point + Poly.constant(c)
            return acc
        point = as_scalar(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def homogeneous_eval(self, num: "Poly", den: "Poly") -> "Poly":
        """den^degree * self(num/den), evaluated without fractions."""
        if self.is_zero:
            return Poly.zero()
        acc = Poly.constant(self.coeffs[-1])
        dpow = Poly.one()
        for c in reversed(self.coeffs[:-1]):
            dpow = dpow * den
            acc = acc * num
            if c:
                acc = acc + dpow * c
        return acc

    def reversed_coeffs(self, length: int | None = None) -> "Poly":
        """z^length * self(1/z); pads with zeros up to the requested length."""
        n = self.degree if length is None else length
        if n < self.degree:
            raise ValueError("reversal length below degree")
        cs = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            cs[n - i] = c
        return Poly(cs)

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k."""
        if self.is_zero or k == 0:
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    # -- normal forms ----------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial cannot be made monic")
        if self.lead == 1:
            return self
        inv = 1 / self.lead
        return Poly(c * inv for c in self.coeffs)

    def content_and_primitive(self) -> tuple[Fraction, "Poly"]:
        """self = content * primitive with integer primitive, positive lead."""
        if self.is_zero:
            return Fraction(0), self
        zz, d = self._zz()
        g = 0
        for c in zz:
            g = _igcd(g, abs(c))
        if zz[-1] < 0:
            g = -g
        return Fraction(g, d), Poly(Fraction(c, g) for c in zz)

    def multiplicity_of_root(self, point) -> int:
        point = as_scalar(point)
        m = 0
        p = self
        while not p.is_zero and p(point) == 0:
            p = p.exact_div(Poly((-point, 1)))
            m += 1
        return m


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    raise TypeError(f"cannot interpret {value!r} as a polynomial")


def format_poly(p: Poly, var: str = "z") -> str:
    """Render with explicit * and ^ so the CLI grammar can re-read it."""
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeff(i)
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            v = var if i == 1 else f"{var}^{i}"
            body = v if mag == 1 else f"{mag}*{v}"
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# gcd / resultant / squarefree machinery
# ---------------------------------------------------------------------------


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over Q (primitive PRS in ZZ inside)."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    a = f.content_and_primitive()[1]
    b = g.content_and_primitive()[1]
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem_zz(a, b)
        if r.is_zero:
            b_out = b
            return b_out.monic()
        r = r.content_and_primitive()[1]
        a, b = b, r
    return a.monic()


def _pseudo_rem_zz(a: Poly, b: Poly) -> Poly:
    """Pseudo-remainder of integer polynomials, computed in ZZ."""
    return _pseudo_rem_zz_scaled(a, b)[0]


def _pseudo_rem_zz_scaled(a: Poly, b: Poly) -> tuple[Poly, int]:
    """(r, e) with r = lc(b)^e * (a mod b) for integer a, b; skips zero tops
    so e can be below the classical deg a - deg b + 1."""
    za = [c.numerator for c in a.coeffs]
    zb = [c.numerator for c in b.coeffs]
    dn = len(zb) - 1
    lb = zb[-1]
    rem = list(za)
    e = 0
    for i in range(len(rem) - dn - 1, -1, -1):
        top = rem[i + dn]
        if top:
            e += 1
            for k in range(len(rem)):
                rem[k] *= lb
            for j, c in enumerate(zb):
                rem[i + j] -= top * c
        # top coefficient is now exactly cancelled
        rem[i + dn] = 0
    return Poly(rem[:dn]), e


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant with the convention Res(f, g) = lc(g)^deg f * prod f(beta_j)
    over the roots beta_j of g.  Zero iff the gcd is nonconstant.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant requires nonzero inputs")
    return _sylvester(g, f)


def _sylvester(a: Poly, b: Poly) -> Fraction:
    """Classical Sylvester resultant Res(a, b) = lc(a)^deg b * prod b(alpha_i)."""
    m, n = a.degree, b.degree
    if m == 0:
        return a.lead ** n
    if n == 0:
        return b.lead ** m
    ca, pa = a.content_and_primitive()
    cb, pb = b.content_and_primitive()
    acc = ca ** n * cb ** m
    sign = 1
    # Iterative Euclidean descent on primitive integer polynomials.
    while True:
        m, n = pa.degree, pb.degree
        if n == 0:
            return acc * sign * pb.lead ** m
        if m < n:
            pa, pb = pb, pa
            if m & n & 1:
                sign = -sign
            continue
        r, e = _pseudo_rem_zz_scaled(pa, pb)
        if r.is_zero:
            return Fraction(0)
        lc = pb.lead
        # Res(pa, pb) = (-1)^(m n) lc^(m - deg rem) Res(pb, rem)
        # with rem = pa mod pb = r / lc^e.
        cr, r = r.content_and_primitive()
        scale = cr / lc ** e
        acc *= (lc ** (m - r.degree) * scale ** n)
        if m & n & 1:
            sign = -sign
        pa, pb = pb, r


def discriminant(f: Poly) -> Fraction:
    """Discriminant via Res(f, f') / lc; sign per the usual convention."""
    d = f.degree
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = _sylvester(f, f.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * r / f.lead


BiOrUni = Union[Poly, "BiPoly"]


@dataclass(frozen=True)
class FactorList:
    """unit * prod(factor^multiplicity); factors normalised and distinct."""

    unit: Fraction
    factors: tuple[tuple[BiOrUni, int], ...]

    def expand(self) -> BiOrUni:
        acc = None
        for f, k in self.factors:
            piece = f ** k
            acc = piece if acc is None else acc * piece
        if acc is None:
            acc = Poly.one()
        return acc * self.unit

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def squarefree_decompose(f: Poly) -> FactorList:
    """Yun decomposition f = unit * prod a_i^i with the a_i monic, squarefree
    and pairwise coprime."""
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    unit = f.lead
    if f.degree == 0:
        return FactorList(unit, ())
    p = f.monic()
    out: list[tuple[Poly, int]] = []
    d = poly_gcd(p, p.derivative())
    if d.degree == 0:
        return FactorList(unit, ((p, 1),))
    b = p.exact_div(d)
    c = p.derivative().exact_div(d)
    k = 1
    while b.degree > 0:
        w = c - b.derivative()
        a = poly_gcd(b, w) if not w.is_zero else b.monic()
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        if not w.is_zero:
            c = w.exact_div(a)
        k += 1
    return FactorList(unit, tuple(out))


def squarefree_part(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of f."""
    acc = Poly.one()
    for a, _ in squarefree_decompose(f):
        acc = acc * a
    return acc


def _poly_to_sympy(f: Poly):
    return sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)],
        _SYM_X,
        domain="QQ",
    )


def _poly_from_sympy(sp) -> Poly:
    cs = sp.all_coeffs()
    return Poly(Fraction(c.p, c.q) for c in reversed([sympy.Rational(c) for c in cs]))


def factor_univariate(f: Poly) -> FactorList:
    """Complete factorisation into monic irreducibles over Q."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.degree == 0:
        return FactorList(f.lead, ())
    unit, parts = _poly_to_sympy(f).factor_list()
    out: list[tuple[Poly, int]] = []
    scale = Fraction(sympy.Rational(unit).p, sympy.Rational(unit).q)
    for sp, mult in parts:
        p = _poly_from_sympy(sp)
        scale *= p.lead ** mult
        out.append((p.monic(), int(mult)))
    out.sort(key=lambda fk: (fk[0].degree, fk[0].coeffs))
    return FactorList(scale, tuple(out))


def rational_roots(f: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities, sorted increasing."""
    roots = []
    for factor, mult in factor_univariate(f):
        if factor.degree == 1:
            roots.append((-factor.coeff(0), mult))
    roots.sort()
    return roots


def power_sums(q: Poly, count: int) -> list[Fraction]:
    """Power sums p_0 .. p_{count-1} of the roots of monic q, by Newton's
    identities (with the linear recurrence taking over past the degree)."""
    m = q.degree
    if m < 1 or q.lead != 1:
        raise ValueError("power sums need a monic polynomial of degree >= 1")
    a = [q.coeff(i) for i in range(m + 1)]
    sums = [Fraction(m)]
    for k in range(1, count):
        if k <= m:
            acc = Fraction(k) * a[m - k]
            for i in range(1, k):
                acc += a[m - i] * sums[k - i]
            sums.append(-acc)
        else:
            acc = Fraction(0)
            for i in range(1, m + 1):
                acc += a[m - i] * sums[k - i]
            sums.append(-acc)
    return sums


def lagrange_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points."""
    # Newton's divided differences keep the arithmetic incremental.
    xs = [as_scalar(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coeffs = [as_scalar(y) for _, y in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    acc = Poly.zero()
    for x, c in zip(reversed(xs[:-1]), reversed(coeffs[1:])):
        acc = (acc + c) * Poly((-x, 1))
    return acc + coeffs[0]


# ---------------------------------------------------------------------------
# Bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Sparse bivariate polynomial over Q, keyed by (x_degree, y_degree)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (i, j), c in (terms.items() if isinstance(terms, dict) else terms):
                c = as_scalar(c)
                if c != 0:
                    key = (int(i), int(j))
                    clean[key] = clean.get(key, Fraction(0)) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v != 0})

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def from_x(p: Poly) -> "BiPoly":
        return BiPoly({(i, 0): c for i, c in enumerate(p.coeffs)})

    @staticmethod
    def from_y(p: Poly) -> "BiPoly":
        return BiPoly({(0, j): c for j, c in enumerate(p.coeffs)})

    @staticmethod
    def x_minus_y() -> "BiPoly":
        return BiPoly({(1, 0): 1, (0, 1): -1})

    # -- queries -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*x^{i}*y^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"BiPoly({body or '0'})"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out)

    def __sub__(self, other) -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - c
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            return BiPoly({k: v * c for k, v in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly({(0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    # -- specialisation ---------------------------------------------------

    def subs_y(self, value) -> Poly:
        """Evaluate y at a rational value; returns a polynomial in x."""
        value = as_scalar(value)
        cs: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            cs[i] = cs.get(i, Fraction(0)) + c * value ** j
        if not cs:
            return Poly.zero()
        out = [Fraction(0)] * (max(cs) + 1)
        for i, c in cs.items():
            out[i] = c
        return Poly(out)

    def subs_x(self, value) -> Poly:
        return self.swap().subs_y(value)

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def eval(self, x_value, y_value) -> Fraction:
        x_value, y_value = as_scalar(x_value), as_scalar(y_value)
        return sum(
            (c * x_value ** i * y_value ** j for (i, j), c in self.terms.items()),
            Fraction(0),
        )

    # -- normal form -----------------------------------------------------

    def _lead_key(self) -> tuple[int, int]:
        return max(self.terms, key=lambda k: (k[0] + k[1], k[0]))

    def content_and_primitive(self) -> tuple[Fraction, "BiPoly"]:
        if self.is_zero:
            return Fraction(0), self
        d = 1
        for c in self.terms.values():
            d = _ilcm(d, c.denominator)
        g = 0
        for c in self.terms.values():
            g = _igcd(g, abs(int(c * d)))
        content = Fraction(g, d)
        if self.terms[self._lead_key()] < 0:
            content = -content
        return content, BiPoly({k: c / content for k, c in self.terms.items()})

    def primitive(self) -> "BiPoly":
        return self.content_and_primitive()[1]

    def to_sympy(self):
        expr = sympy.Integer(0)
        for (i, j), c in self.terms.items():
            expr += sympy.Rational(c.numerator, c.denominator) * _SYM_X**i * _SYM_Y**j
        return sympy.Poly(expr, _SYM_X, _SYM_Y, domain="QQ")

    @staticmethod
    def from_sympy(sp) -> "BiPoly":
        out = {}
        for (i, j), c in sp.terms():
            r = sympy.Rational(c)
            out[(int(i), int(j))] = Fraction(r.p, r.q)
        return BiPoly(out)


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """Primitive-normalised gcd in Q[x, y]."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    h = sympy.gcd(f.to_sympy(), g.to_sympy())
    return BiPoly.from_sympy(sympy.Poly(h, _SYM_X, _SYM_Y, domain="QQ")).primitive()


def factor_bivariate(f: BiPoly) -> FactorList:
    """Irreducible factorisation over Q; factors primitive with positive lead."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.is_constant:
        return FactorList(f.terms.get((0, 0), Fraction(0)), ())
    unit, parts = f.to_sympy().factor_list()
    r = sympy.Rational(unit)
    scale = Fraction(r.p, r.q)
    out: list[tuple[BiPoly, int]] = []
    for sp, mult in parts:
        p = BiPoly.from_sympy(sympy.Poly(sp, _SYM_X, _SYM_Y, domain="QQ"))
        content, prim = p.content_and_primitive()
        scale *= content ** mult
        out.append((prim, int(mult)))
    out.sort(key=lambda fk: (fk[0].deg_x + fk[0].deg_y, sorted(fk[0].terms.items())))
    return FactorList(scale, tuple(out))


def is_irreducible_bivariate(f: BiPoly) -> bool:
    fl = factor_bivariate(f)
    return len(fl.factors) == 1 and fl.factors[0][1] == 1
