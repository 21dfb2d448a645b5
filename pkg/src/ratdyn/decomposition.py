"""Functional decomposition of rational maps and the induced equivalence.

The decomposition search rides on the fiber-product curve of a map: the
numerator of A(x) - A(y) factors over Q, inner factors correspond to
products of its irreducible components that contain the diagonal, and the
matching outer map is recovered by an exact linear solve.  On top of this
sit elementary transformations (A = U o V  ~>  V o U), bounded equivalence
exploration, semiconjugacy verification, and the Lueroth reduction of a
semiconjugacy to a primitive one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .polynomials import (
    BiPoly,
    Poly,
    bipoly_gcd,
    factor_bivariate,
    factor_univariate,
    is_irreducible_bivariate,
    rational_roots,
    squarefree_decompose,
)
from .rational_maps import (
    DegenerateMapError,
    INFINITY,
    Mobius,
    Point,
    RationalMap,
    compose,
    conjugate,
    iterate,
)
from . import spectrum as _spectrum

DECOMPOSITION_DEGREE_BUDGET = 36
EXPLORATION_NODE_BUDGET = 64


class BudgetExceededError(RuntimeError):
    """A configured degree or node budget was exceeded."""


# ---------------------------------------------------------------------------
# Curves attached to maps
# ---------------------------------------------------------------------------


def fiber_curve(a: RationalMap) -> BiPoly:
    """Numerator of a(x) - a(y): vanishes exactly on pairs identified by a."""
    px, qx = BiPoly.from_x(a.num), BiPoly.from_x(a.den)
    py, qy = BiPoly.from_y(a.num), BiPoly.from_y(a.den)
    return (px * qy - py * qx).primitive()


def semiconjugacy_curve(a: RationalMap, x: RationalMap) -> BiPoly:
    """Numerator of a(x) - x(y), the curve whose irreducibility tests
    primitivity of a semiconjugacy solution."""
    pa, qa = BiPoly.from_x(a.num), BiPoly.from_x(a.den)
    px, qx = BiPoly.from_y(x.num), BiPoly.from_y(x.den)
    return (pa * qx - px * qa).primitive()


# ---------------------------------------------------------------------------
# Exact linear algebra
# ---------------------------------------------------------------------------


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right nullspace of the matrix, over Q."""
    mat = [list(map(Fraction, r)) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


def outer_solve(a: RationalMap, inner: RationalMap) -> Optional[RationalMap]:
    """The map U with U o inner = a, when inner right-divides a.

    The cross-multiplied identity is linear in the coefficients of U, so
    this is an exact nullspace computation followed by verification.
    """
    s = inner.degree
    if a.degree % s != 0:
        return None
    m = a.degree // s
    r, t = inner.num, inner.den
    basis_polys = []
    rp = Poly.one()
    for i in range(m + 1):
        basis_polys.append(rp * t ** (m - i))
        rp = rp * r
    cols = [bp * a.den for bp in basis_polys] + [-(bp * a.num) for bp in basis_polys]
    nrows = max(p.degree for p in cols) + 1
    rows = [[col.coeff(i) for col in cols] for i in range(nrows)]
    for vec in _candidate_vectors(nullspace(rows, 2 * (m + 1))):
        c = Poly(vec[: m + 1])
        d = Poly(vec[m + 1:])
        if c.is_zero or d.is_zero:
            continue
        try:
            u = RationalMap(c, d)
        except DegenerateMapError:
            continue
        if u.degree != m:
            continue
        try:
            if compose(u, inner) == a:
                return u
        except RuntimeError:
            continue
    return None


def _candidate_vectors(basis):
    for vec in basis:
        yield vec
    for v1, v2 in itertools.combinations(basis, 2):
        yield [a + b for a, b in zip(v1, v2)]


# ---------------------------------------------------------------------------
# Decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """a = outer o inner, exactly."""

    outer: RationalMap
    inner: RationalMap

    def recompose(self) -> RationalMap:
        return compose(self.outer, self.inner)

    @property
    def proper(self) -> bool:
        return self.outer.degree >= 2 and self.inner.degree >= 2


def _reconstruct_pencil_member(g: BiPoly, s: int) -> Optional[RationalMap]:
    """Try to read a degree-s map V with g ~ num(V(x) - V(y)) off two
    specialisations of y; returns None when g is not such a pencil."""
    first: Optional[Poly] = None
    attempts = 0
    for val in itertools.count(0):
        attempts += 1
        if attempts > 8 * s + 16:
            return None
        slice_ = g.subs_y(Fraction(val))
        if slice_.degree != s:
            continue
        if first is None:
            first = slice_
            continue
        # Independence: the two slices must not be proportional.
        if first * slice_.lead == slice_ * first.lead:
            continue
        try:
            v = RationalMap(first, slice_)
        except DegenerateMapError:
            return None
        return v if v.degree == s else None
    return None


def all_decompositions(a: RationalMap) -> list[Decomposition]:
    """All proper decompositions of a, one per intermediate subfield
    (i.e. up to Moebius between the factors)."""
    n = a.degree
    if n < 2:
        raise ValueError("decomposition needs degree >= 2")
    if n > DECOMPOSITION_DEGREE_BUDGET:
        raise BudgetExceededError(
            f"degree {n} above decomposition budget {DECOMPOSITION_DEGREE_BUDGET}")
    divisors = [s for s in range(2, n) if n % s == 0]
    if not divisors:
        return []
    curve = fiber_curve(a)
    factors = factor_bivariate(curve).factors
    diagonal = BiPoly.x_minus_y()
    others: list[tuple[BiPoly, int]] = []
    seen_diagonal = False
    for g, mult in factors:
        if g == diagonal:
            seen_diagonal = True
            if mult > 1:
                others.append((g, mult - 1))
        else:
            others.append((g, mult))
    if not seen_diagonal:
        raise RuntimeError("fiber curve lost its diagonal component")
    choices = [range(mult + 1) for _, mult in others]
    total = 1
    for c in choices:
        total *= len(c)
    if total > 4096:
        raise BudgetExceededError("too many curve components to enumerate")
    out: list[Decomposition] = []
    for pick in itertools.product(*choices):
        g = diagonal
        for (factor, _), k in zip(others, pick):
            for _ in range(k):
                g = g * factor
        s = g.deg_x
        if s not in divisors or g.deg_y != s:
            continue
        inner = _reconstruct_pencil_member(g, s)
        if inner is None:
            continue
        outer = outer_solve(a, inner)
        if outer is None:
            continue
        out.append(Decomposition(outer, inner))
    out.sort(key=lambda d: (d.inner.degree, d.inner.key(), d.outer.key()))
    return out


def elementary_transform(a: RationalMap, d: Decomposition) -> RationalMap:
    """From a = U o V, the transformed map V o U."""
    if d.recompose() != a:
        raise ValueError("decomposition does not recompose to the map")
    return compose(d.inner, d.outer)


# ---------------------------------------------------------------------------
# Semiconjugacy
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemiconjugacyTriple:
    """Maps a, x, b with x o b = a o x when the triple verifies."""

    a: RationalMap
    x: RationalMap
    b: RationalMap
    primitive: Optional[bool] = None


def verify_semiconjugacy(t: SemiconjugacyTriple) -> bool:
    """Exact check of the commuting square x o b = a o x."""
    return compose(t.x, t.b) == compose(t.a, t.x)


def verify_mutual(
    a: RationalMap, x: RationalMap, y: RationalMap, b: RationalMap
) -> bool:
    """Both squares of a mutual semiconjugacy: y o a = b o y and
    x o b = a o x; when they hold, x o y commutes with a (asserted)."""
    upper = compose(y, a) == compose(b, y)
    lower = compose(x, b) == compose(a, x)
    if upper and lower:
        xy = compose(x, y)
        if compose(xy, a) != compose(a, xy):
            raise RuntimeError("commutation consequence failed; arithmetic bug")
        return True
    return False


def is_primitive(t: SemiconjugacyTriple) -> bool:
    """True when the curve a(x) - x(y) = 0 is irreducible, i.e. the pair
    (x, b) generates the full rational function field."""
    return is_irreducible_bivariate(semiconjugacy_curve(t.a, t.x))


def _luroth_full(
    x_map: RationalMap, b_map: RationalMap
) -> tuple[RationalMap, Optional[RationalMap], Optional[RationalMap]]:
    """Generator w of the field generated by (x_map, b_map), with the
    cofactors x', b' such that x = x' o w and b = b' o w."""
    g = bipoly_gcd(fiber_curve(x_map), fiber_curve(b_map))
    w_deg = g.deg_x
    if w_deg != g.deg_y or w_deg < 1:
        raise RuntimeError("common fiber curve is not balanced")
    if w_deg == 1:
        return RationalMap.identity(), x_map, b_map
    w = _reconstruct_pencil_member(g, w_deg)
    if w is None:
        raise RuntimeError("degenerate specialisation while rebuilding the generator")
    x_res = outer_solve(x_map, w)
    b_res = outer_solve(b_map, w)
    if x_res is None or b_res is None:
        raise RuntimeError("generator does not left-divide the inputs")
    return w, x_res, b_res


def luroth_generator(x_map: RationalMap, b_map: RationalMap) -> RationalMap:
    """A single map w generating the subfield generated by the two inputs;
    the identity map when the pair is already primitive."""
    return _luroth_full(x_map, b_map)[0]


@dataclass
class ElementaryStep:
    """One elementary transformation applied while reducing."""

    source: RationalMap
    witness: Decomposition
    result: RationalMap


@dataclass
class PrimitiveReduction:
    """Output of reduce_to_primitive: x = x0 o w, b0 ~ b by the chain."""

    w: RationalMap
    x0: RationalMap
    b0: RationalMap
    chain: list[ElementaryStep] = field(default_factory=list)


def reduce_to_primitive(t: SemiconjugacyTriple) -> PrimitiveReduction:
    """Peel Lueroth generators off x until the triple becomes primitive,
    replacing b by its elementary transform at each step."""
    if not verify_semiconjugacy(t):
        raise ValueError("input triple does not commute")
    a, x_cur, b_cur = t.a, t.x, t.b
    w_acc = RationalMap.identity()
    chain: list[ElementaryStep] = []
    while not is_primitive(SemiconjugacyTriple(a, x_cur, b_cur)):
        w, x_next, b_inner = _luroth_full(x_cur, b_cur)
        if w.degree < 2 or x_next is None:
            raise RuntimeError("non-primitive triple produced a trivial generator")
        b_next = compose(w, b_inner)
        chain.append(
            ElementaryStep(b_cur, Decomposition(b_inner, w), b_next))
        if x_next.degree >= x_cur.degree:
            raise RuntimeError("reduction failed to decrease the degree")
        x_cur, b_cur = x_next, b_next
        w_acc = compose(w, w_acc)
        if not verify_semiconjugacy(SemiconjugacyTriple(a, x_cur, b_cur)):
            raise RuntimeError("reduction broke the commuting square")
    return PrimitiveReduction(w_acc, x_cur, b_cur, chain)


# ---------------------------------------------------------------------------
# Moebius conjugacy search
# ---------------------------------------------------------------------------


def _marked_points(a: RationalMap) -> dict[Point, tuple]:
    """Rational fixed and critical points with conjugacy-invariant tags."""
    tags: dict[Point, list] = {}

    def add(point: Point, tag: tuple) -> None:
        tags.setdefault(point, []).append(tag)

    phi = a.fixed_point_numerator()
    w = a.wronskian()
    den2 = a.den * a.den
    if not phi.is_constant:
        for sf, mult in squarefree_decompose(phi):
            for root, _ in rational_roots(sf):
                lam = w(root) / den2(root)
                add(Point(root), ("fix", mult, lam))
    m_inf = a.degree + 1 - max(phi.degree, 0)
    if m_inf > 0:
        chart = a.chart_at_infinity()
        lam = chart.wronskian()(0) / chart.den(0) ** 2
        add(INFINITY, ("fix", m_inf, lam))
    if a.degree >= 2:
        for locus, weight in a.critical_divisor():
            if isinstance(locus, Point):
                add(INFINITY, ("crit", weight + 1))
            else:
                for root, _ in rational_roots(locus):
                    add(Point(root), ("crit", weight + 1))
    return {p: tuple(sorted(ts)) for p, ts in tags.items()}


def mobius_conjugacy_search(
    a: RationalMap, b: RationalMap, attempt_budget: int = 5000
) -> Optional[Mobius]:
    """A Moebius mu with mu^-1 o a o mu = b, when one exists with rational
    marked-point data.  None is conclusive when rational marked points
    abound but inconclusive when fewer than three exist per side; callers
    must treat None as "not proven conjugate".
    """
    if a.degree != b.degree:
        raise ValueError("conjugate maps must share a degree")
    if a == b:
        return Mobius.identity()
    if _spectrum.multiplier_polynomial(a, 1) != _spectrum.multiplier_polynomial(b, 1):
        return None
    marked_a = _marked_points(a)
    marked_b = _marked_points(b)
    by_sig_a: dict[tuple, list[Point]] = {}
    for p, sig in sorted(marked_a.items(), key=lambda kv: _point_key(kv[0])):
        by_sig_a.setdefault(sig, []).append(p)
    b_points = sorted(marked_b, key=_point_key)
    if len(b_points) < 3:
        return None
    attempts = 0
    for triple in itertools.combinations(b_points, 3):
        pools = [by_sig_a.get(marked_b[p], []) for p in triple]
        for targets in itertools.product(*pools):
            if len(set(targets)) != 3:
                continue
            attempts += 1
            if attempts > attempt_budget:
                return None
            mu = Mobius.through_points(triple, targets)
            if conjugate(a, mu) == b:
                return mu
    return None


def _point_key(p: Point):
    return (1, Fraction(0)) if p.is_infinity else (0, p.value)


# ---------------------------------------------------------------------------
# Equivalence exploration
# ---------------------------------------------------------------------------


@dataclass
class GraphNode:
    map: RationalMap
    key: tuple
    chain: tuple[int, ...]
    ambiguous: bool = False


@dataclass
class GraphEdge:
    source: int
    target: int
    witness: Decomposition


@dataclass
class EquivalenceGraph:
    root: RationalMap
    depth: int
    nodes: list[GraphNode]
    edges: list[GraphEdge]


def spectral_key(a: RationalMap, iterates: int = 2) -> tuple:
    """Cheap exact conjugacy invariant: degree plus multiplier polynomials."""
    parts = [a.degree]
    for s in range(1, iterates + 1):
        parts.append(_spectrum.multiplier_polynomial(a, s).coeffs)
    return tuple(parts)


def explore_equivalence(a: RationalMap, depth: int) -> EquivalenceGraph:
    """BFS through elementary transformations, merging nodes only when a
    rational conjugacy is exhibited; spectral collisions without a proof
    stay as separate nodes flagged ambiguous."""
    if a.degree < 2:
        raise ValueError("exploration needs degree >= 2")
    nodes = [GraphNode(a, spectral_key(a), ())]
    edges: list[GraphEdge] = []
    frontier = [0]
    for _ in range(depth):
        next_frontier: list[int] = []
        for idx in frontier:
            current = nodes[idx]
            for witness in all_decompositions(current.map):
                transformed = compose(witness.inner, witness.outer)
                target = _locate(nodes, transformed)
                if target is None:
                    key = spectral_key(transformed)
                    ambiguous = False
                    for j, node in enumerate(nodes):
                        if node.key == key:
                            mu = mobius_conjugacy_search(transformed, node.map)
                            if mu is not None:
                                target = j
                                break
                            ambiguous = True
                    if target is None:
                        nodes.append(GraphNode(
                            transformed, key,
                            current.chain + (len(edges),), ambiguous))
                        target = len(nodes) - 1
                        next_frontier.append(target)
                        if len(nodes) > EXPLORATION_NODE_BUDGET:
                            raise BudgetExceededError("node budget exceeded")
                edges.append(GraphEdge(idx, target, witness))
        frontier = next_frontier
    return EquivalenceGraph(a, depth, nodes, edges)


def _locate(nodes: list[GraphNode], candidate: RationalMap) -> Optional[int]:
    for i, node in enumerate(nodes):
        if node.map == candidate:
            return i
    return None
