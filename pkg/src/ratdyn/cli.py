"""Command-line interface: parse maps, run verifications and constructions,
emit deterministic JSON reports on stdout.

Exit codes: 0 once a verdict was computed (including negative verdicts),
2 for operational errors (bad syntax, invalid inputs), 3 when a degree or
node budget was exceeded.  Reports are byte-identical across runs for
identical inputs; pass --timing to append wall-clock data (which is, by
nature, not deterministic).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .decomposition import (
    BudgetExceededError,
    SemiconjugacyTriple,
    all_decompositions,
    explore_equivalence,
    luroth_generator,
    outer_solve,
    reduce_to_primitive,
    spectral_key,
    verify_mutual,
    verify_semiconjugacy,
)
from .expressions import (
    ExpressionError,
    format_map,
    format_orbifold,
    parse_map,
    parse_orbifold,
)
from .lattes import EllipticCurve, build_mutual_pair, multiplication_map
from .orbifolds import (
    OrbifoldError,
    format_nu,
    infer_canonical_orbifold,
    is_covering,
    riemann_hurwitz_check,
)
from .polynomials import Poly
from .rational_maps import DegenerateMapError, RationalMap
from .spectrum import isospectral, multiplier_polynomial

EXIT_OK = 0
EXIT_OPERATIONAL = 2
EXIT_BUDGET = 3


def _scalar_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _poly_json(p: Poly) -> list[list[int]]:
    return [_scalar_json(c) for c in p.coeffs]


def _map_json(m: RationalMap) -> dict:
    return {
        "expr": format_map(m),
        "num": _poly_json(m.num),
        "den": _poly_json(m.den),
        "degree": m.degree,
    }


def _orbifold_json(o) -> dict:
    chi = o.euler_char()
    return {
        "text": format_orbifold(o),
        "signature": [format_nu(v) for v in o.signature()],
        "euler_char": _scalar_json(chi),
    }


def _report(command: str, inputs: dict, verdicts: dict, certificates: dict) -> dict:
    return {
        "schema": 1,
        "command": command,
        "inputs": inputs,
        "verdicts": verdicts,
        "certificates": certificates,
    }


def _curve(text: str) -> EllipticCurve:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("curve must be given as a,b")
    return EllipticCurve(Fraction(parts[0].strip()), Fraction(parts[1].strip()))


# -- command handlers ---------------------------------------------------


def _cmd_verify_semiconj(args) -> dict:
    a, x, b = parse_map(args.A), parse_map(args.X), parse_map(args.B)
    ok = verify_semiconjugacy(SemiconjugacyTriple(a, x, b))
    return _report(
        "verify-semiconj",
        {"A": format_map(a), "X": format_map(x), "B": format_map(b)},
        {"semiconjugate": ok},
        {},
    )


def _cmd_verify_mutual(args) -> dict:
    a, x, y, b = (parse_map(args.A), parse_map(args.X),
                  parse_map(args.Y), parse_map(args.B))
    from .rational_maps import compose

    upper = compose(y, a) == compose(b, y)
    lower = compose(x, b) == compose(a, x)
    ok = verify_mutual(a, x, y, b) if (upper and lower) else False
    return _report(
        "verify-mutual",
        {"A": format_map(a), "X": format_map(x),
         "Y": format_map(y), "B": format_map(b)},
        {"upper_square": upper, "lower_square": lower, "mutual": ok},
        {},
    )


def _cmd_decompose(args) -> dict:
    a = parse_map(args.map)
    decs = all_decompositions(a)
    return _report(
        "decompose",
        {"map": format_map(a)},
        {"count": len(decs)},
        {"decompositions": [
            {"outer": _map_json(d.outer), "inner": _map_json(d.inner)}
            for d in decs
        ]},
    )


def _cmd_explore(args) -> dict:
    a = parse_map(args.map)
    graph = explore_equivalence(a, args.depth)
    edges_isospectral = all(
        graph.nodes[e.source].key == graph.nodes[e.target].key
        for e in graph.edges
    )
    return _report(
        "explore",
        {"map": format_map(a), "depth": args.depth},
        {"nodes": len(graph.nodes), "edges": len(graph.edges),
         "edges_isospectral": edges_isospectral},
        {"nodes": [
            {"expr": format_map(n.map), "ambiguous": n.ambiguous}
            for n in graph.nodes
        ],
            "edges": [
            {"source": e.source, "target": e.target,
             "outer": format_map(e.witness.outer),
             "inner": format_map(e.witness.inner)}
            for e in graph.edges
        ]},
    )


def _cmd_orbifold(args) -> dict:
    a = parse_map(args.map)
    orb = infer_canonical_orbifold(a, args.budget)
    verdicts = {"found": orb is not None}
    certificates = {}
    if orb is not None:
        certificates["orbifold"] = _orbifold_json(orb)
    return _report("orbifold", {"map": format_map(a), "budget": args.budget},
                   verdicts, certificates)


def _cmd_covering_check(args) -> dict:
    f = parse_map(args.map)
    o1 = parse_orbifold(args.orbifold)
    o2 = parse_orbifold(args.target_orbifold) if args.target_orbifold else o1
    check = is_covering(f, o1, o2)
    verdicts = {"covering": bool(check)}
    if check:
        verdicts["riemann_hurwitz"] = riemann_hurwitz_check(f, o1, o2)
    return _report(
        "covering-check",
        {"map": format_map(f), "orbifold": format_orbifold(o1),
         "target_orbifold": format_orbifold(o2)},
        verdicts,
        {"matches": check.matches, "failures": check.failures},
    )


def _cmd_spectrum(args) -> dict:
    a = parse_map(args.map)
    m = multiplier_polynomial(a, args.s)
    return _report(
        "spectrum",
        {"map": format_map(a), "s": args.s},
        {"degree": m.degree},
        {"multiplier_polynomial": _poly_json(m)},
    )


def _cmd_isospectral(args) -> dict:
    a, b = parse_map(args.A), parse_map(args.B)
    ok = isospectral(a, b, args.S)
    return _report(
        "isospectral",
        {"A": format_map(a), "B": format_map(b), "S": args.S},
        {"isospectral": ok},
        {},
    )


def _cmd_lattes_build(args) -> dict:
    curve = _curve(args.curve)
    lat = multiplication_map(curve, args.n)
    rh = riemann_hurwitz_check(lat.map, lat.orb, lat.orb)
    return _report(
        "lattes-build",
        {"curve": [_scalar_json(curve.a), _scalar_json(curve.b)], "n": args.n},
        {"degree": lat.map.degree, "covering": True, "riemann_hurwitz": rh},
        {"map": _map_json(lat.map), "orbifold": _orbifold_json(lat.orb)},
    )


def _cmd_mutual_pair(args) -> dict:
    curve = _curve(args.curve)
    pair = build_mutual_pair(curve, args.n, args.m)
    from .rational_maps import compose

    inner_sq = compose(pair.inner, pair.on_source.map) == compose(
        pair.on_target.map, pair.inner)
    outer_sq = compose(pair.outer, pair.on_target.map) == compose(
        pair.on_source.map, pair.outer)
    closes = compose(pair.outer, pair.inner) == multiplication_map(
        curve, args.n).map
    return _report(
        "mutual-pair",
        {"curve": [_scalar_json(curve.a), _scalar_json(curve.b)],
         "n": args.n, "m": args.m},
        {
            "inner_square": inner_sq,
            "outer_square": outer_sq,
            "composition_is_multiplication": closes,
            "degree_product": pair.outer.degree * pair.inner.degree,
        },
        {
            "on_source": _map_json(pair.on_source.map),
            "on_target": _map_json(pair.on_target.map),
            "outer": _map_json(pair.outer),
            "inner": _map_json(pair.inner),
            "target_curve": [_scalar_json(pair.isogeny.target.a),
                             _scalar_json(pair.isogeny.target.b)],
        },
    )


def _cmd_reduce_primitive(args) -> dict:
    a, x, b = parse_map(args.A), parse_map(args.X), parse_map(args.B)
    triple = SemiconjugacyTriple(a, x, b)
    if not verify_semiconjugacy(triple):
        raise ValueError("the given triple does not commute")
    red = reduce_to_primitive(triple)
    return _report(
        "reduce-primitive",
        {"A": format_map(a), "X": format_map(x), "B": format_map(b)},
        {"steps": len(red.chain), "w_degree": red.w.degree,
         "x0_degree": red.x0.degree},
        {
            "w": _map_json(red.w),
            "x0": _map_json(red.x0),
            "b0": _map_json(red.b0),
            "chain": [
                {"source": format_map(step.source),
                 "outer": format_map(step.witness.outer),
                 "inner": format_map(step.witness.inner),
                 "result": format_map(step.result)}
                for step in red.chain
            ],
        },
    )


def _cmd_luroth(args) -> dict:
    x, b = parse_map(args.X), parse_map(args.B)
    w = luroth_generator(x, b)
    divides_x = w.degree == 1 or outer_solve(x, w) is not None
    divides_b = w.degree == 1 or outer_solve(b, w) is not None
    return _report(
        "luroth",
        {"X": format_map(x), "B": format_map(b)},
        {"w_degree": w.degree, "divides_X": divides_x, "divides_B": divides_b},
        {"w": _map_json(w)},
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratdyn",
        description="Exact rational-map dynamics: semiconjugacy, orbifolds, "
                    "Lattes maps, multiplier spectra.",
    )
    parser.add_argument("--timing", action="store_true",
                        help="append wall-clock timing to the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-semiconj", help="check X o B = A o X exactly")
    p.add_argument("--A", required=True)
    p.add_argument("--X", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(handler=_cmd_verify_semiconj)

    p = sub.add_parser("verify-mutual",
                       help="check the two-square mutual semiconjugacy tower")
    p.add_argument("--A", required=True)
    p.add_argument("--X", required=True)
    p.add_argument("--Y", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(handler=_cmd_verify_mutual)

    p = sub.add_parser("decompose", help="all proper decompositions of a map")
    p.add_argument("--map", required=True)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("explore",
                       help="breadth-first elementary-transformation graph")
    p.add_argument("--map", required=True)
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(handler=_cmd_explore)

    p = sub.add_parser("orbifold", help="infer the canonical orbifold")
    p.add_argument("--map", required=True)
    p.add_argument("--budget", type=int, default=16)
    p.set_defaults(handler=_cmd_orbifold)

    p = sub.add_parser("covering-check",
                       help="verify a covering map between orbifolds")
    p.add_argument("--map", required=True)
    p.add_argument("--orbifold", required=True)
    p.add_argument("--target-orbifold", dest="target_orbifold", default=None)
    p.set_defaults(handler=_cmd_covering_check)

    p = sub.add_parser("spectrum", help="multiplier polynomial of an iterate")
    p.add_argument("--map", required=True)
    p.add_argument("--s", type=int, default=1)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("isospectral",
                       help="compare multiplier spectra up to an iterate bound")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--S", type=int, default=2)
    p.set_defaults(handler=_cmd_isospectral)

    p = sub.add_parser("lattes-build",
                       help="multiplication-by-n map on an elliptic curve")
    p.add_argument("--curve", required=True, help="a,b for y^2 = x^3+ax+b")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_lattes_build)

    p = sub.add_parser("mutual-pair",
                       help="isogeny tower of mutually semiconjugate maps")
    p.add_argument("--curve", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_mutual_pair)

    p = sub.add_parser("reduce-primitive",
                       help="reduce a semiconjugacy to a primitive one")
    p.add_argument("--A", required=True)
    p.add_argument("--X", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(handler=_cmd_reduce_primitive)

    p = sub.add_parser("luroth",
                       help="generator of the field generated by two maps")
    p.add_argument("--X", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(handler=_cmd_luroth)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report = args.handler(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ExpressionError, OrbifoldError, DegenerateMapError,
            ValueError, NotImplementedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPERATIONAL
    if args.timing:
        report["timing"] = {"seconds": round(time.monotonic() - started, 6)}
    sys.stdout.write(json.dumps(report, sort_keys=True,
                                separators=(",", ":")) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
