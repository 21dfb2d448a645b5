"""Exact polynomial arithmetic: gcd, resultants, squarefree and full
factorisation, univariate and bivariate."""

import random
from fractions import Fraction

import pytest
import sympy

from ratdyn.polynomials import (
    BiPoly,
    Poly,
    bipoly_gcd,
    discriminant,
    factor_bivariate,
    factor_univariate,
    is_irreducible_bivariate,
    lagrange_interpolate,
    poly_gcd,
    power_sums,
    rational_roots,
    resultant,
    squarefree_decompose,
    squarefree_part,
)
from helpers import random_poly

X = Poly.x()


def poly(*coeffs):
    """Convenience: poly(c0, c1, ...) low degree first."""
    return Poly(coeffs)


class TestBasicArithmetic:
    def test_trimming_and_degree(self):
        assert poly(1, 2, 0, 0).degree == 1
        assert Poly.zero().degree == -1
        assert Poly.zero().is_zero

    def test_mul_matches_schoolbook(self):
        p = poly(1, 1)  # 1 + z
        q = poly(-1, 1)  # z - 1
        assert p * q == poly(-1, 0, 1)

    def test_divmod_exact(self):
        f = poly(-1, 0, 1)
        quo, rem = divmod(f, poly(-1, 1))
        assert quo == poly(1, 1) and rem.is_zero

    def test_homogeneous_eval(self):
        # den^2 * p(num/den) for p = z^2 + 1
        p = poly(1, 0, 1)
        num, den = poly(0, 1), poly(1, 1)
        assert p.homogeneous_eval(num, den) == num * num + den * den

    def test_compose_via_call(self):
        p = poly(1, 1, 1)
        assert p(poly(0, 2)) == poly(1, 2, 4)

    def test_interpolation(self):
        pts = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)),
               (Fraction(2), Fraction(4))]
        assert lagrange_interpolate(pts) == poly(0, 0, 1)

    def test_power_sums_against_roots(self):
        # (x-1)(x-2)(x-3): power sums 3, 6, 14, 36
        q = poly(-1, 1) * poly(-2, 1) * poly(-3, 1)
        assert power_sums(q, 4) == [3, 6, 14, 36]


class TestGcd:
    def test_shared_root(self):
        assert poly_gcd(poly(-1, 0, 1), poly(-1, 1)) == poly(-1, 1)

    def test_coprime(self):
        assert poly_gcd(X, Poly.one()) == Poly.one()

    def test_euclidean_by_hand(self):
        # gcd(z^3 - z, z^2 - 1) = z^2 - 1 since z^3 - z = z (z^2 - 1)
        assert poly_gcd(poly(0, -1, 0, 1), poly(-1, 0, 1)) == poly(-1, 0, 1)

    def test_divides_both(self):
        rng = random.Random(7)
        for _ in range(25):
            f = random_poly(rng, rng.randint(1, 5))
            g = random_poly(rng, rng.randint(1, 5))
            d = poly_gcd(f, g)
            assert (f % d).is_zero and (g % d).is_zero


class TestResultant:
    def test_linear_pair(self):
        # Convention Res(f, g) = lc(g)^deg f * prod f(beta): here f(3) = 1,
        # the difference of roots up to sign.
        assert resultant(poly(-2, 1), poly(-3, 1)) == 1
        assert abs(resultant(poly(-2, 1), poly(-3, 1))) == 1

    def test_common_root_vanishes(self):
        assert resultant(poly(-1, 0, 1), poly(-1, 1)) == 0

    def test_quadratic_pair_by_hand(self):
        # f = x^2+1 at both roots of x^2-2: (2+1)(2+1) = 9
        assert resultant(poly(1, 0, 1), poly(-2, 0, 1)) == 9

    def test_zero_iff_common_factor(self):
        rng = random.Random(11)
        for _ in range(30):
            f = random_poly(rng, rng.randint(1, 4))
            g = random_poly(rng, rng.randint(1, 4))
            vanishes = resultant(f, g) == 0
            assert vanishes == (poly_gcd(f, g).degree >= 1)

    def test_matches_sympy(self):
        x = sympy.Symbol("x")
        rng = random.Random(13)
        for _ in range(20):
            f = random_poly(rng, rng.randint(1, 5))
            g = random_poly(rng, rng.randint(1, 5))
            mine = resultant(f, g)
            sf = sum(sympy.Rational(c.numerator, c.denominator) * x**i
                     for i, c in enumerate(f.coeffs))
            sg = sum(sympy.Rational(c.numerator, c.denominator) * x**i
                     for i, c in enumerate(g.coeffs))
            # our convention swaps the arguments of the textbook resultant
            theirs = sympy.resultant(sg, sf, x)
            assert mine == Fraction(theirs.p, theirs.q)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            resultant(Poly.zero(), X)


class TestSquarefree:
    def test_constructed(self):
        f = poly(-1, 1) ** 2 * poly(2, 1)
        fl = squarefree_decompose(f)
        assert fl.unit == 1
        assert fl.factors == ((poly(2, 1), 1), (poly(-1, 1), 2))
        assert fl.expand() == f

    def test_pure_power(self):
        fl = squarefree_decompose(Poly.monomial(5))
        assert fl.factors == ((X, 5),)

    def test_nonvanishing_discriminant_means_squarefree(self):
        f = poly(0, -4, 0, 4)  # 4z^3 - 4z
        assert discriminant(f) != 0
        fl = squarefree_decompose(f)
        assert all(mult == 1 for _, mult in fl.factors)
        assert fl.expand() == f

    def test_multiply_back_random(self):
        rng = random.Random(17)
        for _ in range(20):
            f = random_poly(rng, 1) ** rng.randint(1, 3) * random_poly(rng, 2)
            assert squarefree_decompose(f).expand() == f


class TestFactorUnivariate:
    def test_quartic(self):
        fl = factor_univariate(poly(-1, 0, 0, 0, 1))
        assert fl.expand() == poly(-1, 0, 0, 0, 1)
        assert sorted(f.degree for f, _ in fl) == [1, 1, 2]

    def test_irreducible(self):
        fl = factor_univariate(poly(-2, 0, 1))
        assert len(fl.factors) == 1 and fl.factors[0][1] == 1

    def test_duplication_fixed_point_locus(self):
        # On y^2 = x^3 - x the duplication map fixes exactly the x-values
        # of the eight nonzero 3-torsion points, the roots of 3x^4-6x^2-1;
        # the factorisation must multiply back with matching degrees.
        f = poly(-1, 0, -6, 0, 3)
        fl = factor_univariate(f)
        assert fl.expand() == f
        assert sum(p.degree * k for p, k in fl) == 4

    def test_rational_roots(self):
        f = poly(-1, 1) ** 2 * poly(3, 1) * poly(1, 0, 1)
        assert rational_roots(f) == [(Fraction(-3), 1), (Fraction(1), 2)]


def bipoly_xy(expr_terms):
    return BiPoly(expr_terms)


class TestFactorBivariate:
    def test_difference_of_squares(self):
        f = BiPoly({(2, 0): 1, (0, 2): -1})
        fl = factor_bivariate(f)
        assert len(fl.factors) == 2
        assert fl.expand() == f

    def test_linear_in_y_irreducible(self):
        f = BiPoly({(2, 0): 1, (0, 1): -1})
        assert is_irreducible_bivariate(f)

    def test_chebyshev_fiber_factors(self):
        # T4 = T2 o T2, so the fibers of T2 refine those of T4: both
        # components of T2(x) - T2(y) divide T4(x) - T4(y).
        from ratdyn.lattes import chebyshev_poly

        t4, t2 = chebyshev_poly(4), chebyshev_poly(2)
        f4 = BiPoly.from_x(t4) - BiPoly.from_y(t4)
        f2 = BiPoly.from_x(t2) - BiPoly.from_y(t2)
        fl = factor_bivariate(f4)
        assert fl.expand() == f4
        diag = BiPoly.x_minus_y()
        factors = [g for g, _ in fl.factors]
        assert diag in factors
        # every factor of the inner fiber curve shows up again
        for g, _ in factor_bivariate(f2).factors:
            assert g in factors

    def test_pairwise_non_associate_and_specialisation_probe(self):
        from ratdyn.lattes import chebyshev_poly

        t6 = chebyshev_poly(6)
        f = BiPoly.from_x(t6) - BiPoly.from_y(t6)
        fl = factor_bivariate(f)
        factors = [g for g, _ in fl.factors]
        for i, g in enumerate(factors):
            for h in factors[i + 1:]:
                assert g != h
        rng = random.Random(23)
        for g in factors:
            # an irreducible specialisation certifies bivariate
            # irreducibility; skip (rare) degenerate sample points
            confirmed = False
            for _ in range(6):
                c = Fraction(rng.randint(-12, 12), rng.randint(1, 3))
                slice_ = g.subs_y(c)
                if slice_.degree != g.deg_x:
                    continue
                sub_factors = factor_univariate(slice_)
                if len(sub_factors.factors) == 1 and sub_factors.factors[0][1] == 1:
                    confirmed = True
                    break
                if slice_.degree <= 1:
                    confirmed = True
                    break
            assert confirmed or g.deg_x == 0

    def test_bipoly_gcd(self):
        a = BiPoly({(1, 0): 1, (0, 1): -1})  # x - y
        f = a * BiPoly({(1, 0): 1, (0, 1): 1})
        g = a * BiPoly({(2, 0): 1, (0, 0): 3})
        assert bipoly_gcd(f, g) == a


class TestSquarefreePart:
    def test_strips_multiplicity(self):
        f = poly(-1, 1) ** 3 * poly(1, 1)
        assert squarefree_part(f) == poly(-1, 1) * poly(1, 1)
