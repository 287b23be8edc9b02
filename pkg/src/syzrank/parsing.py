"""Text formats: polynomials, points and fan files.

Polynomial grammar::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INTEGER)?
    atom   := NUMBER | IDENT | "(" expr ")"
    NUMBER := INTEGER ("/" INTEGER)?

Implicit multiplication is rejected. Error offsets are byte offsets into
the UTF-8 encoded input.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .fields import QQ, Field
from .polynomial import Point, Polynomial, Ring

__all__ = [
    "ParseError",
    "parse_polynomial",
    "serialize_polynomial",
    "parse_point",
    "parse_fan_text",
    "load_fan_file",
]


class ParseError(ValueError):
    """Malformed input text; ``offset`` is a byte offset (or ``None``)."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^/()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), _byte_offset(text, pos)))
        pos = m.end()
    tokens.append(("end", "", _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    @property
    def tok(self):
        return self.tokens[self.i]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message="syntax error"):
        kind, value, off = self.tok
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"{message}: unexpected {what}", off)

    def parse(self) -> Polynomial:
        if self.tok[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.tok[0] != "end":
            self.error()
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.tok[1] in ("+", "-") and self.tok[0] == "op":
            op = self.advance()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            kind, value, _ = self.tok
            if kind == "op" and value == "*":
                self.advance()
                p = p * self.unary()
            elif kind in ("int", "ident") or (kind == "op" and value == "("):
                self.error("implicit multiplication is not allowed")
            else:
                return p

    def unary(self) -> Polynomial:
        kind, value, _ = self.tok
        if kind == "op" and value == "-":
            self.advance()
            return -self.unary()
        if kind == "op" and value == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, value, off = self.tok
        if kind == "op" and value == "^":
            self.advance()
            kind, value, off = self.tok
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer literal", off)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, off = self.tok
        if kind == "int":
            self.advance()
            num = Fraction(int(value))
            if self.tok[0] == "op" and self.tok[1] == "/":
                self.advance()
                k2, v2, o2 = self.tok
                if k2 != "int":
                    raise ParseError("expected an integer denominator", o2)
                self.advance()
                if int(v2) == 0:
                    raise ParseError("zero denominator", o2)
                num = num / int(v2)
            try:
                return self.ring.constant(num)
            except ZeroDivisionError as exc:
                raise ParseError(str(exc), off) from None
        if kind == "ident":
            self.advance()
            if value not in self.ring.names:
                raise ParseError(f"unknown identifier {value!r}", off)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            self.advance()
            p = self.expr()
            if not (self.tok[0] == "op" and self.tok[1] == ")"):
                self.error("expected ')'")
            self.advance()
            return p
        self.error()


def parse_polynomial(text: str, variables: Ring | Sequence[str], field: Field = QQ) -> Polynomial:
    """Parse ``text`` into a canonical polynomial.

    ``variables`` is either a :class:`Ring` or a list of variable names
    (in which case a standard-graded ring over ``field`` is created).

    >>> str(parse_polynomial("x^3 - y^2*z", ["x", "y", "z"]))
    'x^3 - y^2*z'
    """
    ring = variables if isinstance(variables, Ring) else Ring(variables, field)
    return _Parser(text, ring).parse()


def _format_coeff(c) -> str:
    return str(c)


def serialize_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in descending grevlex order, ``parse`` round-trips it."""
    names = f.ring.names
    pieces = []
    for e, c in f.terms:
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
        )
        negative = c < 0 if isinstance(c, Fraction) else False
        mag = -c if negative else c
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        pieces.append((negative, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out


_PROJECTIVE = re.compile(r"^\s*\[(.*)\]\s*$", re.S)
_TUPLE = re.compile(r"^\s*\((.*)\)\s*$", re.S)
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_coordinate(token: str, offset: int) -> Fraction:
    t = token.strip()
    if not _RATIONAL.match(t):
        raise ParseError(f"non-rational coordinate {t!r}", offset)
    num, _, den = t.partition("/")
    if den and int(den) == 0:
        raise ParseError("zero denominator", offset)
    return Fraction(int(num), int(den) if den else 1)


def parse_point(text: str, kind: str | None = None) -> Point:
    """Parse ``[a:b:c]`` (projective) or ``(a, b, c)`` (Cox or affine).

    ``kind`` overrides the interpretation of the parenthesised form
    (``"cox"`` by default). Irrelevant-locus checks for Cox points need the
    fan and happen in :func:`syzrank.toric.irrelevant_check`.
    """
    m = _PROJECTIVE.match(text)
    if m:
        sep, body, start = ":", m.group(1), m.start(1)
        point_kind = "projective"
    else:
        m = _TUPLE.match(text)
        if not m:
            raise ParseError("expected '[p0:...:pn]' or '(p0, ..., pn)'", 0)
        sep, body, start = ",", m.group(1), m.start(1)
        point_kind = kind or "cox"
    coords = []
    pos = start
    for piece in body.split(sep):
        coords.append(_parse_coordinate(piece, _byte_offset(text, pos)))
        pos += len(piece) + 1
    if point_kind == "projective" and all(c == 0 for c in coords):
        raise ParseError("the zero vector is not a projective point", 0)
    return Point(tuple(coords), point_kind)


def parse_fan_text(text: str) -> dict:
    """Parse a fan document: JSON object with ``rays``, ``cones`` and ``complete``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"fan file is not valid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError("fan file must hold an object")
    for key in ("rays", "cones"):
        if key not in data:
            raise ParseError(f"fan file lacks field {key!r}")
    rays = data["rays"]
    cones = data["cones"]
    if not (isinstance(rays, list) and all(isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rays)):
        raise ParseError("'rays' must be a list of integer vectors")
    if not (isinstance(cones, list) and all(isinstance(c, list) and all(isinstance(x, int) for x in c) for c in cones)):
        raise ParseError("'cones' must be a list of index lists")
    complete = data.get("complete", False)
    if not isinstance(complete, bool):
        raise ParseError("'complete' must be a boolean")
    out = {"rays": rays, "cones": cones, "complete": complete}
    if "names" in data:
        out["names"] = list(data["names"])
    return out


def load_fan_file(path: str | Path) -> dict:
    return parse_fan_text(Path(path).read_text(encoding="utf-8"))
