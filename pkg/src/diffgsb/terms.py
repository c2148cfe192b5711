"""Differential words, monomials of the free monoid T and polynomials of D(X).

Variables and operators are stored as ranks (0, 1, ...) in the declared order
of an :class:`Alphabet`; names only matter for parsing and printing.  A
:class:`DiffWord` is stored as its weight tuple ``(var, m, ops)`` so plain tuple
comparison is already the weight order on letters, and a monomial is a tuple of
letters compared by ``(length, letters)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from .errors import EmptyMonomial, UnknownOperator, UnknownVariable, ZeroPolynomial

Coefficient = Fraction
Scalar = Union[int, Fraction]


class DiffWord(NamedTuple):
    """D_{i1}...D_{im}(x): variable rank, operator count and ranks, outermost first."""

    var: int
    m: int
    ops: tuple[int, ...]

    def derived(self, jbar: tuple[int, ...]) -> "DiffWord":
        """Prepend ``jbar`` to the operator string."""
        if not jbar:
            return self
        return DiffWord(self.var, self.m + len(jbar), tuple(jbar) + self.ops)


def letter(var: int, ops: Iterable[int] = ()) -> DiffWord:
    ops = tuple(ops)
    return DiffWord(var, len(ops), ops)


Monomial = tuple  # tuple[DiffWord, ...]; () is the identity 1
ONE: Monomial = ()


def monomial_key(u: Monomial):
    # deg-lex: length first, then letters left to right by weight
    return (len(u), u)


def mul_monomial(u: Monomial, v: Monomial) -> Monomial:
    return u + v


def total_ops(u: Monomial) -> int:
    return sum(d.m for d in u)


def max_depth(u: Monomial) -> int:
    return max((d.m for d in u), default=0)


class Bound(NamedTuple):
    """Finite region of T: at most ``max_length`` letters, each with at most
    ``max_depth`` operators."""

    max_length: int
    max_depth: int

    def contains(self, u: Monomial) -> bool:
        return len(u) <= self.max_length and all(d.m <= self.max_depth for d in u)


@dataclass(frozen=True)
class Alphabet:
    """Declared variable names and operator labels, both in increasing order."""

    vars: tuple[str, ...]
    ops: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "ops", tuple(int(j) for j in self.ops))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variable names in {self.vars}")
        if len(set(self.ops)) != len(self.ops):
            raise ValueError(f"duplicate operator labels in {self.ops}")

    def var(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def op(self, label: int) -> int:
        try:
            return self.ops.index(int(label))
        except ValueError:
            raise UnknownOperator(f"unknown operator D{label}") from None

    def letter(self, name: str, *labels: int) -> DiffWord:
        """``letter("x", 2, 1)`` is D2 D1 (x)."""
        return letter(self.var(name), (self.op(j) for j in labels))

    def letters(self, max_depth: int) -> list[DiffWord]:
        """All letters with at most ``max_depth`` operators, ascending."""
        out = []
        for v in range(len(self.vars)):
            for m in range(max_depth + 1):
                for ops in itertools.product(range(len(self.ops)), repeat=m):
                    out.append(DiffWord(v, m, ops))
        return out

    def monomials(self, bound: Bound) -> list[Monomial]:
        """All monomials inside ``bound``, in increasing monomial order."""
        letters = self.letters(bound.max_depth)
        out: list[Monomial] = []
        for n in range(bound.max_length + 1):
            out.extend(itertools.product(letters, repeat=n))
        return out

    def parse(self, text: str) -> "Poly":
        from .syntax import parse_polynomial

        return parse_polynomial(text, self)

    def format(self, f: "Poly | Monomial") -> str:
        from .syntax import format_monomial, print_polynomial

        if isinstance(f, Poly):
            return print_polynomial(f, self)
        return format_monomial(f, self)


class Poly:
    """Immutable element of D(X) over the rationals.

    Terms are kept in strictly decreasing monomial order with no zero
    coefficients, so the leading term is the first entry.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for u, c in items:
            acc[u] = acc.get(u, 0) + Fraction(c)
        self._terms = _sorted_terms(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # terms already canonical: nonzero Fractions, decreasing order
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def _collect(cls, acc: dict) -> "Poly":
        return cls._raw(_sorted_terms(acc))

    @classmethod
    def monomial(cls, u: Monomial, c: Scalar = 1) -> "Poly":
        return cls._raw({u: Fraction(c)}) if c else cls._raw({})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls.monomial(ONE)

    # -- inspection ----------------------------------------------------------

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coeff(self, u: Monomial) -> Fraction:
        return self._terms.get(u, Fraction(0))

    @property
    def lead(self) -> Monomial:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        return next(iter(self._terms))

    @property
    def lc(self) -> Fraction:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return next(iter(self._terms.values()))

    def is_monic(self) -> bool:
        return bool(self._terms) and self.lc == 1

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({ONE: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw({u: -c for u, c in self._terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self._terms)
        for u, c in other._terms.items():
            acc[u] = acc.get(u, 0) + c
        return Poly._collect(acc)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        acc = dict(self._terms)
        for u, c in other._terms.items():
            acc[u] = acc.get(u, 0) - c
        return Poly._collect(acc)

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({u: c * a for u, a in self._terms.items()})

    def sandwich(self, a: Monomial = ONE, b: Monomial = ONE) -> "Poly":
        """a·f·b; order of terms survives because the order is monomial."""
        if not a and not b:
            return self
        return Poly._raw({a + u + b: c for u, c in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for u, c in self._terms.items():
            for v, d in other._terms.items():
                w = u + v
                acc[w] = acc.get(w, 0) + c * d
        return Poly._collect(acc)

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def monic(self) -> "Poly":
        return make_monic(self)

    def __repr__(self) -> str:
        from .syntax import print_polynomial

        return f"Poly({print_polynomial(self)!r})"


def _sorted_terms(acc: dict) -> dict:
    items = [(u, c) for u, c in acc.items() if c]
    items.sort(key=lambda t: monomial_key(t[0]), reverse=True)
    return dict(items)


def poly_add(f: Poly, g: Poly) -> Poly:
    return f + g


def poly_scale(c: Scalar, f: Poly) -> Poly:
    return f.scale(c)


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def leading_term(f: Poly) -> tuple[Monomial, Fraction]:
    return f.lead, f.lc


def make_monic(f: Poly) -> Poly:
    lc = f.lc
    if lc == 1:
        return f
    return f.scale(1 / lc)


def require_nonempty(u: Monomial) -> None:
    if not u:
        raise EmptyMonomial("operation undefined on the identity monomial")
