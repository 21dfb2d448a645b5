"""Orbifold structures on the projective line and covering-map checks.

Singular loci are held as squarefree polynomials over Q (plus an optional
marker at infinity), never as isolated algebraic numbers: every covering
condition reduces to gcd / resultant / multiplicity arithmetic.  Ramification
values live in {2, 3, ...} together with infinity, encoded as float('inf').
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .polynomials import (
    Poly,
    factor_univariate,
    format_poly,
    lagrange_interpolate,
    poly_gcd,
    squarefree_decompose,
    squarefree_part,
    _sylvester,
)
from .rational_maps import INFINITY, Point, RationalMap

NU_INF = math.inf

Nu = Union[int, float]


class OrbifoldError(ValueError):
    """Malformed orbifold data."""


class InducedOrbifoldError(ValueError):
    """The pushforward ramification formula is inconsistent: the given inner
    map is not the inner factor of any covering self-map."""


def nu_is_inf(v: Nu) -> bool:
    return v == NU_INF


def nu_mul(v: Nu, e: int) -> Nu:
    return NU_INF if nu_is_inf(v) else v * e


def nu_lcm(a: Nu, b: Nu) -> Nu:
    if nu_is_inf(a) or nu_is_inf(b):
        return NU_INF
    return math.lcm(a, b)


def format_nu(v: Nu) -> str:
    return "inf" if nu_is_inf(v) else str(v)


def _check_nu(v: Nu) -> Nu:
    if nu_is_inf(v):
        return NU_INF
    if isinstance(v, int) and v >= 2:
        return v
    raise OrbifoldError(f"ramification value must be an integer >= 2 or inf, got {v!r}")


@dataclass(frozen=True)
class RamifiedLocus:
    """A squarefree monic polynomial locus (or the point at infinity) with a
    common ramification value on all of its roots."""

    locus: Union[Poly, Point]
    nu: Nu

    def __post_init__(self):
        _check_nu(self.nu)
        if isinstance(self.locus, Point):
            if not self.locus.is_infinity:
                raise OrbifoldError("finite points enter as linear polynomials")
        else:
            if self.locus.is_zero or self.locus.is_constant:
                raise OrbifoldError("locus polynomial must be nonconstant")
            if self.locus.lead != 1:
                raise OrbifoldError("locus polynomial must be monic")
            g = poly_gcd(self.locus, self.locus.derivative())
            if g.degree > 0:
                raise OrbifoldError("locus polynomial must be squarefree")

    @property
    def at_infinity(self) -> bool:
        return isinstance(self.locus, Point)

    @property
    def point_count(self) -> int:
        return 1 if self.at_infinity else self.locus.degree

    def describe(self) -> str:
        where = "inf" if self.at_infinity else format_poly(self.locus)
        return f"nu({where}) = {format_nu(self.nu)}"


class Orbifold:
    """The sphere with finitely many marked loci carrying values nu >= 2."""

    __slots__ = ("loci",)

    def __init__(self, loci=()):
        entries = []
        for item in loci:
            if isinstance(item, RamifiedLocus):
                entries.append(item)
            else:
                locus, nu = item
                entries.append(RamifiedLocus(_coerce_locus(locus), nu))
        finite = [e for e in entries if not e.at_infinity]
        infinite = [e for e in entries if e.at_infinity]
        if len(infinite) > 1:
            raise OrbifoldError("infinity may carry at most one marking")
        for i, a in enumerate(finite):
            for b in finite[i + 1:]:
                if poly_gcd(a.locus, b.locus).degree > 0:
                    raise OrbifoldError("loci must be pairwise coprime")
        # Canonical form: one locus polynomial per ramification value, so
        # equality of orbifolds is equality of the stored data.
        by_nu: dict[Nu, Poly] = {}
        for e in finite:
            by_nu[e.nu] = by_nu[e.nu] * e.locus if e.nu in by_nu else e.locus
        merged = [
            RamifiedLocus(by_nu[nu], nu)
            for nu in sorted(by_nu, key=lambda v: (nu_is_inf(v), v))
        ]
        object.__setattr__(self, "loci", tuple(merged + infinite))

    # -- queries ----------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.loci

    @property
    def finite_loci(self) -> list[RamifiedLocus]:
        return [e for e in self.loci if not e.at_infinity]

    @property
    def nu_at_infinity(self) -> Nu:
        for e in self.loci:
            if e.at_infinity:
                return e.nu
        return 1

    def nu_at(self, point) -> Nu:
        """Ramification value at a rational point (1 when unmarked)."""
        point = Point.of(point)
        if point.is_infinity:
            return self.nu_at_infinity
        for e in self.finite_loci:
            if e.locus(point.value) == 0:
                return e.nu
        return 1

    def signature(self) -> tuple[Nu, ...]:
        values: list[Nu] = []
        for e in self.loci:
            values.extend([e.nu] * e.point_count)
        values.sort(key=lambda v: (nu_is_inf(v), v))
        return tuple(values)

    def euler_char(self) -> Fraction:
        """2 + sum over singular points of (1/nu - 1), exactly."""
        chi = Fraction(2)
        for e in self.loci:
            inv = Fraction(0) if nu_is_inf(e.nu) else Fraction(1, e.nu)
            chi += e.point_count * (inv - 1)
        return chi

    def __eq__(self, other) -> bool:
        if isinstance(other, Orbifold):
            return self.loci == other.loci
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.loci)

    def __repr__(self) -> str:
        return "Orbifold(" + "; ".join(e.describe() for e in self.loci) + ")"


def _coerce_locus(locus) -> Union[Poly, Point]:
    if isinstance(locus, Poly):
        return locus.monic()
    if isinstance(locus, Point):
        if locus.is_infinity:
            return locus
        return Poly((-locus.value, 1))
    if isinstance(locus, (int, Fraction)):
        return Poly((-Fraction(locus), 1))
    raise OrbifoldError(f"cannot interpret {locus!r} as a locus")


def euler_char(o: Orbifold) -> Fraction:
    """Euler characteristic of the orbifold (sphere case), exactly."""
    return o.euler_char()


def signature_orbifold(values, points) -> Orbifold:
    """Build an orbifold with the given signature at the given rational
    points / polynomial loci; each polynomial consumes as many equal values
    as it has roots."""
    values = list(values)
    out = []
    for locus in points:
        locus = _coerce_locus(locus)
        count = 1 if isinstance(locus, Point) else locus.degree
        if len(values) < count:
            raise OrbifoldError("signature shorter than the locus list")
        head, values = values[:count], values[count:]
        if any(v != head[0] for v in head):
            raise OrbifoldError("a polynomial locus needs one common value")
        out.append((locus, head[0]))
    if values:
        raise OrbifoldError("signature longer than the locus list")
    return Orbifold(out)


# ---------------------------------------------------------------------------
# Pullback and pushforward of loci
# ---------------------------------------------------------------------------


def pullback_components(
    f: RationalMap, s: Poly
) -> tuple[list[tuple[Poly, int]], int]:
    """Full preimage divisor of the squarefree locus s under f.

    Returns finite components as squarefree polynomials with their common
    local degree, plus the local degree at infinity when f(inf) is a root
    of s (0 otherwise).  Component degrees weighted by local degree always
    total deg s * deg f.
    """
    n = f.preimage_numerator(s)
    comps = list(squarefree_decompose(n).factors) if not n.is_constant else []
    e_inf = 0
    v = f(INFINITY)
    if not v.is_infinity and s(v.value) == 0:
        e_inf = f.local_degree(INFINITY)
    total = sum(a.degree * k for a, k in comps) + e_inf
    if total != s.degree * f.degree:
        raise RuntimeError("pullback degree accounting failed")
    return comps, e_inf


def pole_components(f: RationalMap) -> tuple[list[tuple[Poly, int]], int]:
    """Preimage divisor of the point at infinity (poles plus a possibly
    fixed infinity)."""
    comps = (
        list(squarefree_decompose(f.den).factors)
        if not f.den.is_constant
        else []
    )
    e_inf = f.local_degree(INFINITY) if f(INFINITY).is_infinity else 0
    total = sum(a.degree * k for a, k in comps) + e_inf
    if total != f.degree:
        raise RuntimeError("pole degree accounting failed")
    return comps, e_inf


def pushforward_support(f: RationalMap, s: Poly) -> Poly:
    """Monic squarefree polynomial whose roots are f(roots of s), for a
    squarefree s none of whose roots is a pole of f."""
    s = s.monic()
    if poly_gcd(s, f.den).degree > 0:
        raise ValueError("pushforward support requires pole-free input")
    samples = []
    for i in range(s.degree + 1):
        w = Fraction(i)
        g = f.den * w - f.num
        if g.is_zero:
            raise RuntimeError("degenerate pushforward sample")
        samples.append((w, _sylvester(s, g)))
    image = lagrange_interpolate(samples)
    return squarefree_part(image)


# ---------------------------------------------------------------------------
# Covering verification
# ---------------------------------------------------------------------------


@dataclass
class CoveringCheck:
    """Outcome of a covering-map test, with a per-component certificate."""

    ok: bool
    matches: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def is_covering(f: RationalMap, o1: Orbifold, o2: Orbifold) -> CoveringCheck:
    """Exact test that f maps o1 to o2 as a covering of orbifolds: the value
    of o2 at f(z) must equal the value of o1 at z times the local degree,
    for every point z of the sphere."""
    if f.degree < 1:
        raise ValueError("covering check needs a non-constant map")
    matches: list[dict] = []
    failures: list[str] = []
    covered = {i: Poly.one() for i, _ in enumerate(o1.finite_loci)}
    infinity_over_support = False
    support: list[Poly] = []

    def match_component(t: Poly, e: int, nu2: Nu, where: str) -> None:
        nonlocal failures
        if nu_is_inf(nu2):
            target: Nu = NU_INF
        else:
            if nu2 % e != 0:
                failures.append(
                    f"{where}: local degree {e} does not divide nu = {nu2}")
                return
            target = nu2 // e
        rest = t
        for i, l1 in enumerate(o1.finite_loci):
            g = poly_gcd(rest, l1.locus) if rest.degree > 0 else Poly.one()
            if g.degree > 0:
                if l1.nu != target:
                    failures.append(
                        f"{where}: component {format_poly(g)} carries "
                        f"nu = {format_nu(l1.nu)}, needs {format_nu(target)}")
                covered[i] = covered[i] * g
                matches.append({
                    "over": where,
                    "component": format_poly(g),
                    "local_degree": e,
                    "nu_source": format_nu(l1.nu),
                })
                rest = rest.exact_div(g)
        if rest.degree > 0:
            if target != 1:
                failures.append(
                    f"{where}: unmarked component {format_poly(rest)} "
                    f"needs nu = {format_nu(target)}")
            else:
                matches.append({
                    "over": where,
                    "component": format_poly(rest),
                    "local_degree": e,
                    "nu_source": "1",
                })

    def match_infinity(e: int, nu2: Nu, where: str) -> None:
        nonlocal infinity_over_support
        infinity_over_support = True
        if nu_is_inf(nu2):
            target: Nu = NU_INF
        elif nu2 % e != 0:
            failures.append(
                f"{where}: local degree {e} at infinity does not divide {nu2}")
            return
        else:
            target = nu2 // e
        nu1 = o1.nu_at_infinity
        if nu1 != target:
            failures.append(
                f"{where}: infinity carries nu = {format_nu(nu1)}, "
                f"needs {format_nu(target)}")
        else:
            matches.append({
                "over": where,
                "component": "inf",
                "local_degree": e,
                "nu_source": format_nu(nu1),
            })

    for l2 in o2.loci:
        if l2.at_infinity:
            comps, e_inf = pole_components(f)
            where = "inf"
        else:
            comps, e_inf = pullback_components(f, l2.locus)
            where = format_poly(l2.locus)
        for t, e in comps:
            support.append(t)
            match_component(t, e, l2.nu, where)
        if e_inf > 0:
            match_infinity(e_inf, l2.nu, where)

    for i, l1 in enumerate(o1.finite_loci):
        if covered[i].monic() != l1.locus:
            failures.append(
                f"marked locus {format_poly(l1.locus)} maps outside the "
                "singular support of the target")
    if o1.nu_at_infinity != 1 and not infinity_over_support:
        failures.append("marked infinity maps outside the singular support")

    if f.degree >= 2:
        for locus, _ in f.critical_divisor():
            if isinstance(locus, Point):
                if not infinity_over_support:
                    failures.append(
                        "critical point at infinity maps outside the "
                        "singular support")
                continue
            rest = locus
            for t in support:
                g = poly_gcd(rest, t) if rest.degree > 0 else Poly.one()
                if g.degree > 0:
                    rest = rest.exact_div(g)
            if rest.degree > 0:
                failures.append(
                    f"critical locus {format_poly(rest)} maps outside the "
                    "singular support")

    return CoveringCheck(not failures, matches, failures)


def riemann_hurwitz_check(f: RationalMap, o1: Orbifold, o2: Orbifold) -> bool:
    """chi(o1) = chi(o2) * deg f, asserted after verifying the covering."""
    check = is_covering(f, o1, o2)
    if not check:
        raise ValueError("not a covering map: " + "; ".join(check.failures))
    return o1.euler_char() == o2.euler_char() * f.degree


# ---------------------------------------------------------------------------
# Induced orbifold (pushforward of ramification through an inner factor)
# ---------------------------------------------------------------------------

_INF_NODE = "inf"

Node = Union[Poly, str]


def _node_key(node: Node):
    if node == _INF_NODE:
        return (1, 0, ())
    return (0, node.degree, node.coeffs)


def induced_orbifold(o: Orbifold, y: RationalMap) -> Orbifold:
    """The orbifold o* with nu*(y(z)) = nu(z) * local degree of y at z.

    Raises InducedOrbifoldError when the defining formula is inconsistent,
    which certifies that y is not the inner factor of any covering self-map
    of o.
    """
    if o.is_empty:
        raise OrbifoldError("empty orbifold: no ramification to transport")
    candidates: set[Node] = set()

    def add_image_of_locus(s: Poly) -> None:
        g = poly_gcd(s, y.den)
        if g.degree > 0:
            candidates.add(_INF_NODE)
            s = s.exact_div(g)
        if s.degree > 0:
            image = pushforward_support(y, s.monic())
            for q, _ in factor_univariate(image):
                candidates.add(q)

    def add_point_image(p: Point) -> None:
        v = y(p)
        if v.is_infinity:
            candidates.add(_INF_NODE)
        else:
            candidates.add(Poly((-v.value, 1)))

    for l1 in o.loci:
        if l1.at_infinity:
            add_point_image(INFINITY)
        else:
            add_image_of_locus(l1.locus)
    if y.degree >= 2:
        for locus, _ in y.critical_divisor():
            if isinstance(locus, Point):
                add_point_image(INFINITY)
            else:
                add_image_of_locus(locus)

    loci: list[tuple[Union[Poly, Point], Nu]] = []
    for node in sorted(candidates, key=_node_key):
        contributions: list[Nu] = []
        if node == _INF_NODE:
            comps, e_inf = pole_components(y)
        else:
            comps, e_inf = pullback_components(y, node)
        for t, e in comps:
            rest = t
            for l1 in o.finite_loci:
                g = poly_gcd(rest, l1.locus) if rest.degree > 0 else Poly.one()
                if g.degree > 0:
                    contributions.append(nu_mul(l1.nu, e))
                    rest = rest.exact_div(g)
            if rest.degree > 0:
                contributions.append(e)
        if e_inf > 0:
            contributions.append(nu_mul(o.nu_at_infinity, e_inf))
        first = contributions[0]
        if any(v != first for v in contributions):
            raise InducedOrbifoldError(
                "pushforward value is not well defined over "
                + (node if node == _INF_NODE else format_poly(node))
                + f": contributions {sorted(map(format_nu, contributions))}")
        if first != 1:
            loci.append((INFINITY if node == _INF_NODE else node, first))

    o_star = Orbifold(loci)
    check = is_covering(y, o, o_star)
    if not check:
        raise InducedOrbifoldError(
            "inner map does not cover the induced orbifold: "
            + "; ".join(check.failures))
    return o_star


# ---------------------------------------------------------------------------
# Canonical orbifold inference for postcritically finite maps
# ---------------------------------------------------------------------------


def infer_canonical_orbifold(
    f: RationalMap, orbit_budget: int = 16
) -> Optional[Orbifold]:
    """Minimal self-covered orbifold of f, by propagating ramification
    forward from the critical loci with lcm updates.

    Returns None when the critical orbit does not stabilise within the
    budget, or when the stabilised values do not give Euler characteristic
    zero with a genuine self-covering.
    """
    if f.degree < 2:
        raise ValueError("orbifold inference needs degree >= 2")

    def image_of(node: Node) -> Node:
        if node == _INF_NODE:
            v = f(INFINITY)
            return _INF_NODE if v.is_infinity else Poly((-v.value, 1))
        if poly_gcd(node, f.den).degree > 0:
            return _INF_NODE  # irreducible, so every root is a pole
        image = pushforward_support(f, node)
        factors = factor_univariate(image).factors
        if len(factors) != 1:
            raise RuntimeError("image of an irreducible locus must be irreducible")
        return factors[0][0]

    wronskian_factors: dict[Poly, int] = {}
    critical: list[tuple[Node, int]] = []
    for locus, weight in f.critical_divisor():
        if isinstance(locus, Point):
            critical.append((_INF_NODE, weight + 1))
        else:
            for q, _ in factor_univariate(locus):
                wronskian_factors[q] = weight
                critical.append((q, weight + 1))

    def local_degree_of(node: Node) -> int:
        if node == _INF_NODE:
            return f.local_degree(INFINITY)
        return wronskian_factors.get(node, 0) + 1

    images: dict[Node, Node] = {}
    seeds: dict[Node, Nu] = {}
    for node, e in critical:
        w = images.get(node)
        if w is None:
            w = image_of(node)
            images[node] = w
        seeds[w] = nu_lcm(seeds.get(w, 1), e)

    nodes: set[Node] = set()
    frontier = set(seeds)
    steps = 0
    while frontier - nodes:
        if steps >= orbit_budget:
            return None
        nodes |= frontier
        new_frontier = set()
        for n in frontier:
            if n not in images:
                images[n] = image_of(n)
            new_frontier.add(images[n])
        frontier = new_frontier
        steps += 1

    order = sorted(nodes, key=_node_key)
    nu: dict[Node, Nu] = {n: seeds.get(n, 1) for n in order}
    stable = False
    for _ in range(3 * len(order) + 4):
        changed = False
        for n in order:
            w = images[n]
            req = nu_lcm(nu[w], nu_mul(nu[n], local_degree_of(n)))
            if req != nu[w]:
                nu[w] = req
                changed = True
        if not changed:
            stable = True
            break
    if not stable:
        # Values pumped around a critical cycle grow without bound: infinity.
        for _ in range(len(order) + 2):
            changed = False
            for n in order:
                w = images[n]
                req = nu_lcm(nu[w], nu_mul(nu[n], local_degree_of(n)))
                if req != nu[w]:
                    nu[w] = NU_INF
                    changed = True
            if not changed:
                break
        else:
            return None

    loci = [
        (INFINITY if n == _INF_NODE else n, nu[n])
        for n in order
        if nu[n] != 1
    ]
    try:
        orb = Orbifold(loci)
    except OrbifoldError:
        return None
    if orb.euler_char() != 0:
        return None
    if not is_covering(f, orb, orb):
        return None
    return orb
