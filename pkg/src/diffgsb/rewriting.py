"""(S,D)-word machinery: occurrences, reduction, compositions, GSB test."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional

from .derivation import derive_poly, leading_derived
from .errors import ZeroPolynomial
from .terms import ONE, Alphabet, Bound, Monomial, Poly, make_monic, monomial_key

INCLUSION_OUTER = "inclusion_outer"
INCLUSION_DERIVED = "inclusion_derived"
INTERSECTION = "intersection"


class RewriteSystem:
    """A finite list of monic nonzero polynomials, indexed by the variable of
    the first letter of each leading monomial."""

    __slots__ = ("rules", "_by_var", "_units")

    def __init__(self, rules: Iterable[Poly] = ()):
        self.rules: tuple[Poly, ...] = tuple(rules)
        self._by_var: dict[int, list[int]] = defaultdict(list)
        self._units: list[int] = []
        for k, s in enumerate(self.rules):
            if s.is_zero():
                raise ZeroPolynomial("a rewrite rule cannot be 0")
            if s.lc != 1:
                raise ValueError(f"rule {k} is not monic")
            lead = s.lead
            if lead:
                self._by_var[lead[0].var].append(k)
            else:
                self._units.append(k)

    @classmethod
    def from_polys(cls, polys: Iterable[Poly]) -> "RewriteSystem":
        """Monic-normalize and drop zeros."""
        return cls(make_monic(p) for p in polys if not p.is_zero())

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[Poly]:
        return iter(self.rules)

    def __getitem__(self, k: int) -> Poly:
        return self.rules[k]

    def __repr__(self) -> str:
        return f"RewriteSystem({list(self.rules)!r})"

    def candidates(self, var: int) -> list[int]:
        return self._by_var.get(var, [])


@dataclass(frozen=True)
class Occurrence:
    """host = a · d^jbar(lead(rule)) · b."""

    index: int
    rule: Poly = field(repr=False)
    a: Monomial
    jbar: tuple[int, ...]
    b: Monomial

    def host(self) -> Monomial:
        lead = self.rule.lead
        if not lead:
            return self.a + self.b
        return self.a + leading_derived(lead, self.jbar) + self.b

    def word(self) -> Poly:
        """The (S,D)-word a · D^jbar(rule) · b."""
        return derived_rule(self.rule, self.jbar).sandwich(self.a, self.b)


@lru_cache(maxsize=1 << 15)
def derived_rule(s: Poly, jbar: tuple[int, ...]) -> Poly:
    return derive_poly(s, jbar)


def _match_at(u: Monomial, p: int, lead: Monomial) -> Optional[tuple[int, ...]]:
    """jbar with u[p:p+|lead|] == d^jbar(lead), or None."""
    n = len(lead)
    if p + n > len(u):
        return None
    d, first = u[p], lead[0]
    if d.var != first.var or d.m < first.m:
        return None
    k = d.m - first.m
    if d.ops[k:] != first.ops:
        return None
    if u[p + 1:p + n] != lead[1:]:
        return None
    return d.ops[:k]


def _iter_occurrences(u: Monomial, S: RewriteSystem) -> Iterator[Occurrence]:
    for k in S._units:
        yield Occurrence(k, S.rules[k], ONE, (), u)
    for p, d in enumerate(u):
        for k in S.candidates(d.var):
            s = S.rules[k]
            lead = s.lead
            jbar = _match_at(u, p, lead)
            if jbar is not None:
                yield Occurrence(k, s, u[:p], jbar, u[p + len(lead):])


def find_occurrences(u: Monomial, S: RewriteSystem) -> list[Occurrence]:
    """Every way to write u = a · d^jbar(s̄) · b, by position then rule order.

    A rule with leading monomial 1 is reported once, at a = 1.
    """
    return list(_iter_occurrences(u, S))


def first_occurrence(u: Monomial, S: RewriteSystem) -> Optional[Occurrence]:
    return next(_iter_occurrences(u, S), None)


def is_reducible(u: Monomial, S: RewriteSystem) -> bool:
    return first_occurrence(u, S) is not None


@dataclass
class ReductionStep:
    coeff: object
    occurrence: Occurrence


def reduce(f: Poly, S: RewriteSystem, trace: Optional[list] = None) -> Poly:
    """Normal form of ``f`` modulo S.

    While the remainder has a reducible leading monomial, subtract the matching
    (S,D)-word scaled by its coefficient; otherwise move the leading term to the
    output.  The first occurrence in :func:`find_occurrences` order is used.
    If ``trace`` is a list, each subtraction is appended as a ReductionStep.
    """
    rem = f.as_dict()
    out: dict = {}
    while rem:
        lead = max(rem, key=monomial_key)
        c = rem[lead]
        occ = first_occurrence(lead, S)
        if occ is None:
            out[lead] = c
            del rem[lead]
            continue
        if trace is not None:
            trace.append(ReductionStep(c, occ))
        a, b = occ.a, occ.b
        for v, d in derived_rule(occ.rule, occ.jbar):
            w = a + v + b
            val = rem.get(w, 0) - c * d
            if val:
                rem[w] = val
            else:
                rem.pop(w, None)
    return Poly._collect(out)


# -- compositions ----------------------------------------------------------


@dataclass(frozen=True)
class Composition:
    kind: str
    f: Poly = field(repr=False)
    g: Poly = field(repr=False)
    w: Monomial
    value: Poly
    a: Monomial = ONE
    b: Monomial = ONE
    ibar: tuple[int, ...] = ()
    jbar: tuple[int, ...] = ()
    f_index: Optional[int] = None
    g_index: Optional[int] = None

    def words(self) -> list[Poly]:
        """The two (S,D)-words whose difference is the composition."""
        if self.kind == INCLUSION_OUTER:
            return [self.f, derived_rule(self.g, self.jbar).sandwich(self.a, self.b)]
        if self.kind == INCLUSION_DERIVED:
            return [derived_rule(self.f, self.ibar), self.g.sandwich(ONE, self.b)]
        return [self.f.sandwich(ONE, self.b), derived_rule(self.g, self.jbar).sandwich(self.a, ONE)]


def compositions(f: Poly, g: Poly, f_index: Optional[int] = None,
                 g_index: Optional[int] = None) -> list[Composition]:
    """All compositions (f, g)_w of the three kinds.

    inclusion_outer:   w = f̄ = a·d^jbar(ḡ)·b, value f − a·D^jbar(g)·b
    inclusion_derived: w = d^ibar(f̄) = ḡ·b with ibar nonempty, value D^ibar(f) − g·b
    intersection:      w = f̄·b = a·d^jbar(ḡ), a, b ≠ 1, |f̄| + |ḡ| > |w|,
                       value f·b − a·D^jbar(g)
    The self-inclusion of a rule at its own full leading word is skipped.
    """
    fl, gl = f.lead, g.lead
    kw = dict(f_index=f_index, g_index=g_index)
    out: list[Composition] = []
    same = f == g

    # (1) ḡ derived sits inside f̄
    if not gl:
        if not (same and not fl):
            out.append(Composition(INCLUSION_OUTER, f, g, fl, f - g.sandwich(ONE, fl), ONE, fl, **kw))
    else:
        for p in range(len(fl) - len(gl) + 1):
            jbar = _match_at(fl, p, gl)
            if jbar is None:
                continue
            a, b = fl[:p], fl[p + len(gl):]
            if same and not a and not b and not jbar:
                continue
            value = f - derived_rule(g, jbar).sandwich(a, b)
            out.append(Composition(INCLUSION_OUTER, f, g, fl, value, a, b, (), jbar, **kw))

    # (2) a derivative of f̄ starts with ḡ, ibar nonempty
    if fl and gl and len(gl) <= len(fl):
        f0, g0 = fl[0], gl[0]
        k = g0.m - f0.m
        if (f0.var == g0.var and k > 0 and g0.ops[k:] == f0.ops
                and gl[1:] == fl[1:len(gl)]):
            ibar = g0.ops[:k]
            b = fl[len(gl):]
            w = leading_derived(fl, ibar)
            value = derived_rule(f, ibar) - g.sandwich(ONE, b)
            out.append(Composition(INCLUSION_DERIVED, f, g, w, value, ONE, b, ibar, (), **kw))

    # (3) a proper suffix of f̄ is a derived prefix of ḡ, ḡ sticking out past f̄
    if fl and gl:
        g0 = gl[0]
        for p in range(1, len(fl)):
            overlap = len(fl) - p
            if overlap >= len(gl):
                continue
            d = fl[p]
            k = d.m - g0.m
            if d.var != g0.var or k < 0 or d.ops[k:] != g0.ops:
                continue
            if fl[p + 1:] != gl[1:overlap]:
                continue
            jbar = d.ops[:k]
            a, b = fl[:p], gl[overlap:]
            w = fl + b
            value = f.sandwich(ONE, b) - derived_rule(g, jbar).sandwich(a, ONE)
            out.append(Composition(INTERSECTION, f, g, w, value, a, b, (), jbar, **kw))
    return out


def all_compositions(S: RewriteSystem) -> Iterator[Composition]:
    for i, f in enumerate(S.rules):
        for j, g in enumerate(S.rules):
            yield from compositions(f, g, i, j)


def is_trivial(c: Composition, S: RewriteSystem) -> bool:
    return reduce(c.value, S).is_zero()


@dataclass
class GSBReport:
    ok: bool
    checked: int
    witness: Optional[Composition] = None
    remainder: Optional[Poly] = None

    def __bool__(self) -> bool:
        return self.ok


def is_gsb(S: RewriteSystem,
           accept: Optional[Callable[[Composition], bool]] = None) -> GSBReport:
    """Check that every composition of S (ordered pairs, f = g included)
    reduces to zero.  ``accept`` restricts which compositions are examined."""
    checked = 0
    for c in all_compositions(S):
        if accept is not None and not accept(c):
            continue
        checked += 1
        r = reduce(c.value, S)
        if not r.is_zero():
            return GSBReport(False, checked, c, r)
    return GSBReport(True, checked)


def irr_enumerate(S: RewriteSystem, alphabet: Alphabet, bound: Bound) -> list[Monomial]:
    """Irreducible monomials within ``bound``, increasing."""
    return [u for u in alphabet.monomials(bound) if not is_reducible(u, S)]
