"""Exact arithmetic for rational-map dynamics over Q.

Semiconjugate and mutually semiconjugate rational maps, elementary
transformations and their equivalence, orbifold self-coverings of the
sphere, Lattes maps realised on elliptic curves, and exact multiplier
spectra.
"""

from .polynomials import (
    BiPoly,
    FactorList,
    Poly,
    Scalar,
    factor_bivariate,
    factor_univariate,
    poly_gcd,
    resultant,
    squarefree_decompose,
)
from .rational_maps import (
    INFINITY,
    DegenerateMapError,
    Mobius,
    Point,
    RationalMap,
    common_iterate,
    compose,
    conjugate,
    iterate,
)
from .orbifolds import (
    NU_INF,
    Orbifold,
    OrbifoldError,
    InducedOrbifoldError,
    RamifiedLocus,
    euler_char,
    induced_orbifold,
    infer_canonical_orbifold,
    is_covering,
    riemann_hurwitz_check,
    signature_orbifold,
)
from .decomposition import (
    BudgetExceededError,
    Decomposition,
    EquivalenceGraph,
    SemiconjugacyTriple,
    all_decompositions,
    elementary_transform,
    explore_equivalence,
    is_primitive,
    luroth_generator,
    mobius_conjugacy_search,
    reduce_to_primitive,
    verify_mutual,
    verify_semiconjugacy,
)
from .lattes import (
    EllipticCurve,
    IsogenyData,
    LattesMap,
    MutualPair,
    build_mutual_pair,
    chebyshev,
    check_multiplier_formula,
    division_polynomials,
    dual_isogeny,
    lattes_orbifold,
    multiplication_map,
    power_map,
    velu_isogeny,
)
from .spectrum import (
    MultiplierSpectrum,
    classify_fixed_points,
    isospectral,
    multiplier_polynomial,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
