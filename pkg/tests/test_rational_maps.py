"""Rational maps: composition, iteration, derivatives, conjugation,
critical data, common iterates."""

import random
from fractions import Fraction

import pytest

from ratdyn.lattes import chebyshev, chebyshev_poly, multiplication_map, EllipticCurve
from ratdyn.polynomials import Poly, poly_gcd
from ratdyn.rational_maps import (
    DegenerateMapError,
    INFINITY,
    Mobius,
    Point,
    RationalMap,
    common_iterate,
    compose,
    conjugate,
    iterate,
)
from helpers import random_map, random_mobius


def poly(*coeffs):
    return Poly(coeffs)


Z2 = RationalMap(Poly.monomial(2))
INV = RationalMap(Poly.one(), Poly.x())


class TestCanonicalForm:
    def test_common_factor_cancelled(self):
        m = RationalMap(poly(0, 1, 1), poly(0, 1))  # (z^2+z)/z = z+1
        assert m.num == poly(1, 1) and m.den == Poly.one()

    def test_denominator_monic(self):
        m = RationalMap(poly(1, 0, 1), poly(0, -2))
        assert m.den.lead == 1

    def test_polynomial_map_denominator_one(self):
        m = RationalMap(poly(-1, 0, 2), poly(2))
        assert m.den == Poly.one()
        assert m.num == poly(Fraction(-1, 2), 0, 1)

    def test_constant_rejected(self):
        with pytest.raises(DegenerateMapError):
            RationalMap(poly(3), poly(1))
        with pytest.raises(DegenerateMapError):
            RationalMap(poly(0, 1), poly(0, 2))  # z/2z

    def test_equality_is_structural(self):
        assert RationalMap(poly(0, 0, 2), poly(2)) == Z2


class TestEvaluation:
    def test_finite_points(self):
        assert Z2(Fraction(3)) == Point(Fraction(9))
        assert INV(Fraction(0)) == INFINITY

    def test_infinity(self):
        assert Z2(INFINITY) == INFINITY
        assert INV(INFINITY) == Point(Fraction(0))
        same_deg = RationalMap(poly(1, 2), poly(0, 1))  # (2z+1)/z
        assert same_deg(INFINITY) == Point(Fraction(2))


class TestCompose:
    def test_powers(self):
        assert compose(Z2, Z2) == RationalMap(Poly.monomial(4))

    def test_chebyshev_semigroup(self):
        t2, t3, t6 = chebyshev(2), chebyshev(3), chebyshev(6)
        assert compose(t2, t3) == t6
        assert compose(t3, t2) == t6

    def test_involution(self):
        assert compose(INV, INV) == RationalMap.identity()

    def test_degree_multiplicative_random(self):
        rng = random.Random(41)
        for _ in range(50):
            u = random_map(rng, rng.randint(1, 4))
            v = random_map(rng, rng.randint(1, 4))
            assert compose(u, v).degree == u.degree * v.degree

    def test_associative_random(self):
        rng = random.Random(43)
        for _ in range(10):
            u = random_map(rng, rng.randint(1, 3))
            v = random_map(rng, rng.randint(1, 3))
            w = random_map(rng, rng.randint(1, 3))
            assert compose(compose(u, v), w) == compose(u, compose(v, w))


class TestIterate:
    def test_cube_of_square(self):
        assert iterate(Z2, 3) == RationalMap(Poly.monomial(8))

    def test_identity_case(self):
        assert iterate(Z2, 1) == Z2

    def test_chebyshev(self):
        assert iterate(chebyshev(2), 2) == chebyshev(4)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            iterate(Z2, 0)


class TestDerivative:
    def test_square(self):
        assert Z2.derivative() == RationalMap(poly(0, 2))

    def test_inverse(self):
        d = INV.derivative()
        assert d == RationalMap(poly(-1), Poly.monomial(2))

    def test_chebyshev_by_expansion(self):
        # T3 = 4z^3 - 3z differentiates to 12z^2 - 3
        assert chebyshev(3).derivative() == RationalMap(poly(-3, 0, 12))

    def test_chain_rule_random(self):
        rng = random.Random(47)
        for _ in range(10):
            u = random_map(rng, rng.randint(2, 3))
            v = random_map(rng, rng.randint(2, 3))
            lhs = compose(u, v).derivative()
            u_prime_along_v = compose(u.derivative(), v)
            v_prime = v.derivative()
            # cross-multiplied product comparison avoids building a
            # possibly-degenerate product map
            num = u_prime_along_v.num * v_prime.num
            den = u_prime_along_v.den * v_prime.den
            assert lhs.num * den == num * lhs.den


class TestConjugate:
    def test_translation(self):
        mu = Mobius(1, 1, 0, 1)  # z + 1
        assert conjugate(Z2, mu) == RationalMap(poly(0, 2, 1))

    def test_identity(self):
        assert conjugate(Z2, Mobius.identity()) == Z2

    def test_unicritical_normalisation_fails_over_q(self):
        # conjugating 2z^3 by cz has leading coefficient 2c^2; making it 1
        # needs c^2 = 1/2, which has no rational solution
        cubic = RationalMap(poly(0, 0, 0, 2))
        monic_cubic = RationalMap(poly(0, 0, 0, 1))
        for c in [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1, 2),
                  Fraction(7, 10), Fraction(-12, 17)]:
            assert 2 * c * c != 1
            got = conjugate(cubic, Mobius(c, 0, 0, 1))
            assert got == RationalMap(poly(0, 0, 0, 2 * c * c))
            assert got != monic_cubic

    def test_inverse_conjugation_roundtrip(self):
        rng = random.Random(53)
        for _ in range(10):
            a = random_map(rng, rng.randint(2, 4))
            mu = random_mobius(rng)
            assert conjugate(conjugate(a, mu), mu.inverse()) == a


class TestCriticalDivisor:
    def test_square(self):
        div = Z2.critical_divisor()
        assert (Poly.x(), 1) in div
        assert (INFINITY, 1) in div

    def test_chebyshev_two(self):
        div = chebyshev(2).critical_divisor()
        assert (Poly.x(), 1) in div
        assert (INFINITY, 1) in div

    def test_duplication_total_ramification(self):
        lat = multiplication_map(EllipticCurve(Fraction(-1), Fraction(0)), 2)
        total = 0
        for locus, weight in lat.map.critical_divisor():
            total += weight if isinstance(locus, Point) else locus.degree * weight
        assert total == 6

    def test_riemann_hurwitz_count_random(self):
        rng = random.Random(59)
        for _ in range(15):
            a = random_map(rng, rng.randint(2, 4))
            total = 0
            for locus, weight in a.critical_divisor():
                total += weight if isinstance(locus, Point) else locus.degree * weight
            assert total == 2 * a.degree - 2


class TestLocalDegree:
    def test_polynomial_at_infinity(self):
        assert Z2.local_degree(INFINITY) == 2
        assert chebyshev(5).local_degree(INFINITY) == 5

    def test_simple_points(self):
        assert Z2.local_degree(Fraction(0)) == 2
        assert Z2.local_degree(Fraction(3)) == 1

    def test_pole_order(self):
        m = RationalMap(Poly.one(), Poly.monomial(3))
        assert m.local_degree(Fraction(0)) == 3


class TestCommonIterate:
    def test_power_pair(self):
        z4 = RationalMap(Poly.monomial(4))
        assert common_iterate(Z2, z4, 4, 4) == (2, 1)

    def test_absent(self):
        assert common_iterate(Z2, chebyshev(2), 3, 3) is None

    def test_same_map(self):
        assert common_iterate(Z2, Z2, 2, 2) == (1, 1)


class TestMobius:
    def test_through_points(self):
        mu = Mobius.through_points(
            [Point(Fraction(0)), Point(Fraction(1)), INFINITY],
            [Point(Fraction(1)), Point(Fraction(2)), INFINITY],
        )
        assert mu.apply(Fraction(0)) == Point(Fraction(1))
        assert mu.apply(Fraction(1)) == Point(Fraction(2))
        assert mu.apply(INFINITY) == INFINITY

    def test_through_points_with_infinity_source(self):
        mu = Mobius.through_points(
            [INFINITY, Point(Fraction(0)), Point(Fraction(1))],
            [Point(Fraction(0)), INFINITY, Point(Fraction(1))],
        )
        assert mu.apply(INFINITY) == Point(Fraction(0))
        assert mu.apply(Fraction(0)) == INFINITY

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            Mobius(1, 2, 2, 4)

    def test_as_map_roundtrip(self):
        rng = random.Random(61)
        for _ in range(10):
            mu = random_mobius(rng)
            m = mu.as_map()
            assert compose(m, mu.inverse().as_map()) == RationalMap.identity()
