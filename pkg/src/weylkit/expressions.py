"""Text and JSON frontend for algebra elements.

Grammar (EBNF)::

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)* | '-' term
    factor   := atom ('^' NAT)?
    atom     := VAR | RATIONAL | '(' expr ')'
    VAR      := /[xd][0-9]+/ | /z/
    RATIONAL := NAT ('/' NAT)?

Multiplication is always explicit (``x1*d1``), exponents are nonnegative
integers, rationals are written ``p/q``, and unary minus binds looser
than ``*``.  Tokens are case-insensitive and ASCII-only.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import IndexOutOfRange, ParseError
from .generators import AlgebraKind, FreeExpression, Generator

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<VAR>[xdXD][0-9]+|[zZ])|(?P<NAT>[0-9]+)|(?P<OP>[-+*^/()]))"
)

# A parsed sum of words, before any canonicalization.
_Terms = list[tuple[Fraction, tuple[Generator, ...]]]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(where, {"variable", "number", "operator"}, text[where])
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, kind: AlgebraKind):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n
        self.kind = kind

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def fail(self, expected: set[str]):
        tok = self.peek()
        if tok is None:
            raise ParseError(len(self.text), expected)
        raise ParseError(tok[2], expected, tok[1])

    def eat_op(self, *ops: str) -> str | None:
        tok = self.peek()
        if tok and tok[0] == "OP" and tok[1] in ops:
            self.pos += 1
            return tok[1]
        return None

    def parse(self) -> _Terms:
        terms = self.expr()
        if self.peek() is not None:
            self.fail({"'+'", "'-'", "'*'", "'^'", "end of input"})
        return terms

    def expr(self) -> _Terms:
        terms = self.term()
        while True:
            op = self.eat_op("+", "-")
            if op is None:
                return terms
            rhs = self.term()
            if op == "-":
                rhs = [(-c, w) for c, w in rhs]
            terms = terms + rhs

    def term(self) -> _Terms:
        if self.eat_op("-"):
            return [(-c, w) for c, w in self.term()]
        terms = self.factor()
        while self.eat_op("*"):
            rhs = self.factor()
            terms = [(c1 * c2, w1 + w2) for c1, w1 in terms for c2, w2 in rhs]
        return terms

    def factor(self) -> _Terms:
        base = self.atom()
        if self.eat_op("^"):
            tok = self.peek()
            if tok is None or tok[0] != "NAT":
                self.fail({"nonnegative integer exponent"})
            self.pos += 1
            e = int(tok[1])
            out: _Terms = [(Fraction(1), ())]
            for _ in range(e):
                out = [(c1 * c2, w1 + w2) for c1, w1 in out for c2, w2 in base]
            return out
        return base

    def atom(self) -> _Terms:
        tok = self.peek()
        if tok is None:
            self.fail({"variable", "number", "'('"})
        kind, value, _ = tok
        if kind == "VAR":
            self.pos += 1
            value = value.lower()
            if value == "z":
                g = Generator.z()
            else:
                index = int(value[1:])
                if index < 1:
                    raise IndexOutOfRange(f"variable index must be at least 1, got {value}")
                g = Generator(value[0], index)
            g.check(self.n, self.kind)
            return [(Fraction(1), (g,))]
        if kind == "NAT":
            self.pos += 1
            num = int(value)
            if self.eat_op("/"):
                den_tok = self.peek()
                if den_tok is None or den_tok[0] != "NAT" or int(den_tok[1]) == 0:
                    self.fail({"nonzero denominator"})
                self.pos += 1
                return [(Fraction(num, int(den_tok[1])), ())]
            return [(Fraction(num), ())]
        if value == "(":
            self.pos += 1
            inner = self.expr()
            if not self.eat_op(")"):
                self.fail({"')'"})
            return inner
        self.fail({"variable", "number", "'('"})


def parse(text: str, n: int, kind: AlgebraKind | str) -> FreeExpression:
    """Parse ``text`` into a raw free-algebra expression.

    Validates indices against ``n`` and z-legality against ``kind``; does
    no algebraic simplification beyond rational normalization.

    >>> str(parse("3/2 * z * x2", 2, "B"))
    '3/2*z*x2'
    """
    if isinstance(kind, str):
        kind = AlgebraKind.from_string(kind)
    terms = _Parser(text, n, kind).parse()
    return FreeExpression.from_terms(n, terms)


# -- rendering -----------------------------------------------------------------

def _coeff_str(c: Fraction) -> str:
    return str(c)


def _format_terms(parts: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, monomial-text) pairs into canonical text."""
    if not parts:
        return "0"
    pieces = []
    for i, (c, mono) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if mono == "1":
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag)}*{mono}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


def render(e, format: str = "text") -> str:
    """Deterministic canonical text or JSON for an element.

    Accepts PBW elements and shriek elements; terms come out in canonical
    order, so distinct canonical elements always render differently.
    """
    from .pbw import AlgebraElement
    from .shriek import ShriekElement

    if format not in ("text", "json"):
        raise ValueError(f"unknown render format {format!r}")
    if isinstance(e, AlgebraElement):
        terms = e.terms()
        if format == "text":
            return _format_terms([(c, str(m)) for m, c in terms])
        payload = {
            "algebra": e.kind.value,
            "n": e.n,
            "terms": [
                {
                    "coeff": f"{c.numerator}/{c.denominator}",
                    "z": m.zexp,
                    "x": list(m.xexps),
                    "d": list(m.dexps),
                }
                for m, c in terms
            ],
        }
        return json.dumps(payload)
    if isinstance(e, ShriekElement):
        terms = e.terms()
        if format == "text":
            return _format_terms([(c, w.word_str(e.n)) for w, c in terms])
        payload = {
            "algebra": e.kind.value,
            "n": e.n,
            "terms": [
                {
                    "coeff": f"{c.numerator}/{c.denominator}",
                    "z": w.zflag,
                    "x": [1 if w.xmask >> i & 1 else 0 for i in range(e.n)],
                    "d": [1 if w.dmask >> i & 1 else 0 for i in range(e.n)],
                }
                for w, c in terms
            ],
        }
        return json.dumps(payload)
    raise TypeError(f"cannot render {type(e).__name__}")
