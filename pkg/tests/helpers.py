"""Shared test utilities: seeded random generators for exact objects."""

import random
from fractions import Fraction

from ratdyn.polynomials import Poly, poly_gcd
from ratdyn.rational_maps import DegenerateMapError, Mobius, RationalMap


def random_fraction(rng: random.Random, span: int = 6) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 4))


def random_poly(rng: random.Random, degree: int, span: int = 6) -> Poly:
    while True:
        coeffs = [random_fraction(rng, span) for _ in range(degree)]
        coeffs.append(Fraction(rng.choice([1, -1]) * rng.randint(1, span)))
        p = Poly(coeffs)
        if p.degree == degree:
            return p


def random_map(rng: random.Random, degree: int, span: int = 4) -> RationalMap:
    """A random rational map of exactly the requested degree."""
    while True:
        dp = rng.randint(0, degree)
        dq = degree if dp < degree else rng.randint(0, degree)
        num = random_poly(rng, dp, span)
        den = random_poly(rng, dq, span)
        if poly_gcd(num, den).degree > 0:
            continue
        try:
            m = RationalMap(num, den)
        except DegenerateMapError:
            continue
        if m.degree == degree:
            return m


def random_mobius(rng: random.Random, span: int = 5) -> Mobius:
    while True:
        entries = [random_fraction(rng, span) for _ in range(4)]
        try:
            return Mobius(*entries)
        except ValueError:
            continue
