"""Canonical text syntax for polynomials.

Grammar (whitespace-insensitive)::

    poly   := term (('+' | '-') term)*
    term   := coeff ('*' mono)? | mono
    coeff  := '-'? integer ('/' positive-integer)?
    mono   := factor ('*' factor)* | '1'
    factor := ('D' index)* '(' var ')'

``D3 D2 D1 (x)`` is D_3 D_2 D_1 (x); ``D12`` is the single operator with
label 12.  The printer emits terms in decreasing monomial order and its output
parses back to the same polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .terms import ONE, Alphabet, DiffWord, Monomial, Poly

_TOKEN = re.compile(
    r"(?P<num>\d+)|(?P<op>D\s*\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9']*)|(?P<sym>[-+*/()])"
)
_SPACE = re.compile(r"\s*")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        pos = _SPACE.match(text, pos).end()
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), pos))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.toks = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_sym(self, s: str):
        kind, val, pos = self.take()
        if kind != "sym" or val != s:
            raise ParseError(f"expected {s!r}, found {val or 'end of input'!r}", pos)

    def poly(self) -> Poly:
        acc: dict = {}
        sign = 1
        while True:
            u, c = self.term()
            acc[u] = acc.get(u, 0) + sign * c
            kind, val, pos = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                sign = 1 if val == "+" else -1
                continue
            if kind != "end":
                raise ParseError(f"unexpected {val!r}", pos)
            return Poly(acc)

    def term(self) -> tuple[Monomial, Fraction]:
        kind, val, pos = self.peek()
        neg = False
        if kind == "sym" and val == "-":
            self.take()
            neg = True
            kind, val, pos = self.peek()
        if kind == "num":
            c = self.coeff()
            if self.peek()[0] == "sym" and self.peek()[1] == "*":
                self.take()
                u = self.mono()
            else:
                u = ONE
        else:
            c = Fraction(1)
            u = self.mono()
        return u, -c if neg else c

    def coeff(self) -> Fraction:
        _, num, _ = self.take()
        kind, val, pos = self.peek()
        if kind == "sym" and val == "/":
            self.take()
            kind, den, pos = self.take()
            if kind != "num" or int(den) == 0:
                raise ParseError("expected positive integer denominator", pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def mono(self) -> Monomial:
        kind, val, pos = self.peek()
        if kind == "num":
            if val != "1":
                raise ParseError(f"expected monomial, found {val!r}", pos)
            self.take()
            return ONE
        letters = [self.factor()]
        while self.peek()[0] == "sym" and self.peek()[1] == "*":
            self.take()
            kind, val, pos = self.peek()
            if kind == "num" and val == "1":
                self.take()
                continue
            letters.append(self.factor())
        return tuple(letters)

    def factor(self) -> DiffWord:
        ops = []
        while self.peek()[0] == "op":
            _, val, pos = self.take()
            ops.append(self.alphabet.op(int(val[1:].strip())))
        self.expect_sym("(")
        kind, name, pos = self.take()
        if kind != "name":
            raise ParseError(f"expected variable name, found {name or 'end of input'!r}", pos)
        var = self.alphabet.var(name)
        self.expect_sym(")")
        return DiffWord(var, len(ops), tuple(ops))


def parse_polynomial(text: str, alphabet: Alphabet) -> Poly:
    return _Parser(text, alphabet).poly()


def _names(alphabet: Alphabet | None, u: Monomial):
    if alphabet is not None:
        return alphabet.vars, alphabet.ops
    nv = max((d.var for d in u), default=-1) + 1
    no = max((max(d.ops, default=-1) for d in u), default=-1) + 1
    return tuple(f"x{k}" for k in range(nv)), tuple(range(1, no + 1))


def format_monomial(u: Monomial, alphabet: Alphabet | None = None) -> str:
    if not u:
        return "1"
    names, labels = _names(alphabet, u)
    parts = []
    for d in u:
        ops = "".join(f"D{labels[j]} " for j in d.ops)
        parts.append(f"{ops}({names[d.var]})")
    return " * ".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def print_polynomial(f: Poly, alphabet: Alphabet | None = None) -> str:
    if f.is_zero():
        return "0"
    if alphabet is None:
        # one shared naming for the whole polynomial
        names = _names(None, tuple(d for u in f.monomials() for d in u))
        alphabet = Alphabet(names[0], names[1])
    out = []
    for k, (u, c) in enumerate(f):
        mag = abs(c)
        if not u:
            body = _format_coeff(mag)
        elif mag == 1:
            body = format_monomial(u, alphabet)
        else:
            body = f"{_format_coeff(mag)} * {format_monomial(u, alphabet)}"
        if k == 0:
            if c < 0:
                body = f"-{body}" if not u or mag != 1 else f"-1 * {body}"
            out.append(body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)
