"""Brute-force linear algebra over bounded pieces of Id(S).

The span of every (S,D)-word a·D^jbar(s)·b whose full expansion fits inside a
:class:`Bound` is row-reduced exactly over the rationals.  This gives an
independent check of the rewriting machinery: bounded ideal membership, the
leading-term property of ideal elements, and the claim that the irreducible
monomials form a linear basis of the quotient.

All checks are one-sided at a finite bound.  A span element is always a genuine
ideal element, but an ideal element whose every certificate leaves the bound is
invisible here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import OutOfBound
from .rewriting import RewriteSystem, derived_rule, first_occurrence, reduce
from .terms import Alphabet, Bound, Monomial, Poly, monomial_key


@dataclass
class SpanBasis:
    """Reduced row-echelon basis of the bounded span, keyed by pivot monomial.

    Pivots are leading monomials with coefficient 1 and occur in no other row.
    """

    bound: Bound
    pivots: dict = field(default_factory=dict)  # pivot monomial -> row dict
    words: int = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> list[Poly]:
        """Rows by decreasing pivot."""
        keys = sorted(self.pivots, key=monomial_key, reverse=True)
        return [Poly._collect(dict(self.pivots[k])) for k in keys]

    def reduce_row(self, row: dict) -> dict:
        """Eliminate every pivot monomial from ``row`` (mutated and returned)."""
        todo = [u for u in row if u in self.pivots]
        while todo:
            u = max(todo, key=monomial_key)
            c = row.pop(u)
            for v, d in self.pivots[u].items():
                if v == u:
                    continue
                val = row.get(v, 0) - c * d
                if val:
                    row[v] = val
                else:
                    row.pop(v, None)
            todo = [v for v in row if v in self.pivots]
        return row


def _words(S: RewriteSystem, alphabet: Alphabet, bound: Bound) -> Iterator[Poly]:
    n_ops = len(alphabet.ops)
    contexts: dict[int, list[tuple[Monomial, Monomial]]] = {}

    letters = alphabet.letters(bound.max_depth)

    def pairs(room: int):
        if room not in contexts:
            by_len = [list(itertools.product(letters, repeat=n)) for n in range(room + 1)]
            contexts[room] = [
                (a, b)
                for la in range(room + 1)
                for lb in range(room - la + 1)
                for a in by_len[la]
                for b in by_len[lb]
            ]
        return contexts[room]

    for s in S.rules:
        lead = s.lead
        spare = bound.max_depth - (lead[0].m if lead else 0)
        for n in range(max(spare, 0) + 1):
            if n and not lead:
                break  # D^jbar(1) = 0
            for jbar in itertools.product(range(n_ops), repeat=n):
                w = derived_rule(s, jbar)
                if w.is_zero():
                    continue
                if not all(bound.contains(u) for u in w.monomials()):
                    continue
                room = bound.max_length - max(len(u) for u in w.monomials())
                if room < 0:
                    continue
                for a, b in pairs(room):
                    yield w.sandwich(a, b)


def build_span(S: RewriteSystem, alphabet: Alphabet, bound: Bound) -> SpanBasis:
    """Row-reduce all (S,D)-words that lie entirely inside ``bound``."""
    span = SpanBasis(bound)
    for word in _words(S, alphabet, bound):
        span.words += 1
        row = span.reduce_row(word.as_dict())
        if not row:
            continue
        lead = max(row, key=monomial_key)
        inv = 1 / row[lead]
        row = {u: c * inv for u, c in row.items()}
        # keep the form reduced: clear the new pivot from existing rows
        for other in span.pivots.values():
            c = other.get(lead)
            if c is None:
                continue
            for v, d in row.items():
                val = other.get(v, 0) - c * d
                if val:
                    other[v] = val
                else:
                    other.pop(v, None)
        span.pivots[lead] = row
    return span


def ideal_member(f: Poly, span: SpanBasis) -> bool:
    for u in f.monomials():
        if not span.bound.contains(u):
            raise OutOfBound(f"monomial of length {len(u)} lies outside {span.bound}")
    return not span.reduce_row(f.as_dict())


@dataclass
class OracleReport:
    ok: bool
    witness: Optional[object] = None
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def check_statement_ii(S: RewriteSystem, span: SpanBasis) -> OracleReport:
    """Every nonzero span element has an S-reducible leading monomial.

    Leading monomials of span elements are exactly the pivots, so checking the
    rows suffices.
    """
    for row in span.rows:
        if first_occurrence(row.lead, S) is None:
            return OracleReport(False, row)
    return OracleReport(True, detail={"rank": span.rank})


def check_statement_iii(S: RewriteSystem, span: SpanBasis, alphabet: Alphabet) -> OracleReport:
    """Irreducible monomials are a basis of the bounded quotient.

    Independence: no pivot is irreducible.  Spanning: every reducible bounded
    monomial is a pivot, so each monomial is congruent to a combination of
    irreducible ones.  Together: #monomials = #Irr + rank.
    """
    monomials = alphabet.monomials(span.bound)
    irr = [u for u in monomials if first_occurrence(u, S) is None]
    detail = {"monomials": len(monomials), "irr": len(irr), "rank": span.rank}
    irr_set = set(irr)
    for p in sorted(span.pivots, key=monomial_key):
        if p in irr_set:
            return OracleReport(False, ("independence", p), detail)
    for u in monomials:
        if u not in irr_set and u not in span.pivots:
            return OracleReport(False, ("spanning", u), detail)
    assert len(monomials) == len(irr) + span.rank
    return OracleReport(True, detail=detail)


def normal_form_matches(f: Poly, S: RewriteSystem, span: SpanBasis) -> bool:
    """f − reduce(f, S) lies in the bounded span (requires it to fit the bound)."""
    return ideal_member(f - reduce(f, S), span)

