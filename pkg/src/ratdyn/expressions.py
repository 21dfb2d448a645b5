"""Parser for rational-map expressions and the orbifold mini-syntax.

Grammar (standard precedence, ^ binds tightest, then unary -, then * /,
then + -):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' signed-integer)?
    atom    := 'z' | integer | builtin '(' args ')' | '(' expr ')'
    builtin := 'T' | 'pow' | 'lattes'

Values are exact numerator/denominator pairs, so rational literals like
3/4 come out of ordinary division; the parsed result must be non-constant.
Orbifolds are written "(nu1,nu2,...)@{locus,...}" where each locus is a
rational point, "inf", or "poly:c0,c1,..." (coefficients by ascending
degree); a polynomial locus consumes one equal nu per root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattes import EllipticCurve, chebyshev, multiplication_map, power_map
from .orbifolds import NU_INF, Orbifold, signature_orbifold
from .polynomials import Poly
from .rational_maps import DegenerateMapError, INFINITY, RationalMap

MAX_SOURCE_BYTES = 64 * 1024


class ExpressionError(ValueError):
    """Syntax or semantics error, carrying a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass
class _Token:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        ch = source[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        start_col = column
        if ch.isdigit():
            j = i
            while j < len(source) and source[j].isdigit():
                j += 1
            tokens.append(_Token("int", source[i:j], line, start_col))
            column += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(source) and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("name", source[i:j], line, start_col))
            column += j - i
            i = j
            continue
        if ch in "+-*/^(),":
            tokens.append(_Token("op", ch, line, start_col))
            column += 1
            i += 1
            continue
        raise ExpressionError(f"unexpected character {ch!r}", line, column)
    tokens.append(_Token("end", "", line, column))
    return tokens


@dataclass
class _Value:
    """A not-yet-validated rational function: numerator over denominator."""

    num: Poly
    den: Poly

    def _combined(self, other: "_Value") -> tuple[Poly, Poly, Poly]:
        return self.num * other.den, other.num * self.den, self.den * other.den

    def add(self, other: "_Value") -> "_Value":
        a, b, d = self._combined(other)
        return _Value(a + b, d)

    def sub(self, other: "_Value") -> "_Value":
        a, b, d = self._combined(other)
        return _Value(a - b, d)

    def mul(self, other: "_Value") -> "_Value":
        return _Value(self.num * other.num, self.den * other.den)

    def div(self, other: "_Value") -> "_Value":
        return _Value(self.num * other.den, self.den * other.num)

    def neg(self) -> "_Value":
        return _Value(-self.num, self.den)

    def pow(self, k: int) -> "_Value":
        if k >= 0:
            return _Value(self.num ** k, self.den ** k)
        return _Value(self.den ** (-k), self.num ** (-k))


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind == "op" and tok.text == text:
            return self.advance()
        raise ExpressionError(f"expected {text!r}", tok.line, tok.column)

    def fail(self, message: str):
        tok = self.peek()
        raise ExpressionError(message, tok.line, tok.column)

    # grammar ----------------------------------------------------------

    def parse_expr(self) -> _Value:
        value = self.parse_term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.parse_term()
            value = value.add(rhs) if op == "+" else value.sub(rhs)
        return value

    def parse_term(self) -> _Value:
        value = self.parse_unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance()
            rhs = self.parse_unary()
            if op.text == "/":
                if rhs.num.is_zero:
                    raise ExpressionError(
                        "division by zero", op.line, op.column)
                value = value.div(rhs)
            else:
                value = value.mul(rhs)
        return value

    def parse_unary(self) -> _Value:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return self.parse_unary().neg()
        return self.parse_power()

    def parse_power(self) -> _Value:
        base = self.parse_atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.advance()
            exponent = self.parse_signed_int()
            if exponent < 0 and base.num.is_zero:
                self.fail("zero cannot carry a negative exponent")
            return base.pow(exponent)
        return base

    def parse_signed_int(self) -> int:
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            sign = -1
            tok = self.peek()
        if tok.kind != "int":
            self.fail("expected an integer exponent")
        self.advance()
        return sign * int(tok.text)

    def parse_atom(self) -> _Value:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.parse_expr()
            self.expect_op(")")
            return value
        if tok.kind == "int":
            self.advance()
            return _Value(Poly.constant(int(tok.text)), Poly.one())
        if tok.kind == "name":
            self.advance()
            if tok.text == "z":
                return _Value(Poly.x(), Poly.one())
            return self.parse_builtin(tok)
        self.fail("expected an expression")

    def parse_builtin(self, tok: _Token) -> _Value:
        name = tok.text
        self.expect_op("(")
        args = [self.parse_expr()]
        while self.peek().kind == "op" and self.peek().text == ",":
            self.advance()
            args.append(self.parse_expr())
        self.expect_op(")")

        def as_rational(v: _Value) -> Fraction:
            if v.num.degree > 0 or v.den.degree > 0 or v.den.is_zero:
                raise ExpressionError(
                    f"{name} needs rational-number arguments",
                    tok.line, tok.column)
            return v.num.coeff(0) / v.den.coeff(0)

        def as_int(v: _Value) -> int:
            r = as_rational(v)
            if r.denominator != 1:
                raise ExpressionError(
                    f"{name} needs an integer argument", tok.line, tok.column)
            return int(r)

        try:
            if name == "T":
                if len(args) != 1:
                    raise ExpressionError("T takes one argument",
                                          tok.line, tok.column)
                m = chebyshev(as_int(args[0]))
            elif name == "pow":
                if len(args) != 1:
                    raise ExpressionError("pow takes one argument",
                                          tok.line, tok.column)
                m = power_map(as_int(args[0]))
            elif name == "lattes":
                if len(args) != 3:
                    raise ExpressionError(
                        "lattes takes three arguments a, b, n",
                        tok.line, tok.column)
                curve = EllipticCurve(as_rational(args[0]), as_rational(args[1]))
                m = multiplication_map(curve, as_int(args[2])).map
            else:
                raise ExpressionError(f"unknown builtin {name!r}",
                                      tok.line, tok.column)
        except (ValueError, NotImplementedError) as exc:
            if isinstance(exc, ExpressionError):
                raise
            raise ExpressionError(str(exc), tok.line, tok.column) from exc
        return _Value(m.num, m.den)


def parse_map(source: str) -> RationalMap:
    """Parse an expression into a non-constant rational map."""
    if len(source.encode()) > MAX_SOURCE_BYTES:
        raise ExpressionError("expression exceeds 64 KiB", 1, 1)
    parser = _Parser(source)
    value = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ExpressionError("trailing input", tok.line, tok.column)
    if value.den.is_zero:
        raise ExpressionError("zero denominator", 1, 1)
    try:
        return RationalMap(value.num, value.den)
    except DegenerateMapError as exc:
        raise ExpressionError(str(exc), 1, 1) from exc


def format_map(m: RationalMap) -> str:
    """Canonical printable form; parse_map round-trips it exactly."""
    return str(m)


def parse_orbifold(source: str) -> Orbifold:
    """Parse "(nu1,...)@{locus,...}" into an orbifold."""
    text = source.strip()
    if "@" not in text:
        raise ValueError("orbifold syntax is (values)@{loci}")
    head, tail = text.split("@", 1)
    head = head.strip()
    tail = tail.strip()
    if not (head.startswith("(") and head.endswith(")")):
        raise ValueError("orbifold values must be parenthesised")
    if not (tail.startswith("{") and tail.endswith("}")):
        raise ValueError("orbifold loci must be braced")
    values = []
    for piece in _split_commas(head[1:-1]):
        piece = piece.strip()
        if piece == "inf":
            values.append(NU_INF)
        else:
            values.append(int(piece))
    loci = []
    for piece in _split_commas(tail[1:-1]):
        piece = piece.strip()
        if piece == "inf":
            loci.append(INFINITY)
        elif piece.startswith("poly:"):
            coeffs = [Fraction(c.strip()) for c in piece[5:].split(";")]
            loci.append(Poly(coeffs))
        else:
            loci.append(Fraction(piece))
    return signature_orbifold(values, loci)


def _split_commas(text: str) -> list[str]:
    return [p for p in text.split(",") if p.strip()] if text.strip() else []


def format_orbifold(o: Orbifold) -> str:
    """Inverse of parse_orbifold on canonical orbifolds."""
    from .orbifolds import format_nu

    values: list[str] = []
    loci: list[str] = []
    for entry in o.loci:
        if entry.at_infinity:
            values.append(format_nu(entry.nu))
            loci.append("inf")
        elif entry.locus.degree == 1:
            values.append(format_nu(entry.nu))
            loci.append(str(-entry.locus.coeff(0)))
        else:
            values.extend([format_nu(entry.nu)] * entry.locus.degree)
            loci.append("poly:" + ";".join(str(c) for c in entry.locus.coeffs))
    return "(" + ",".join(values) + ")@{" + ",".join(loci) + "}"
