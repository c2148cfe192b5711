"""Leibniz action of the operators on D(X), and substitution homomorphisms."""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .errors import UnboundVariable
from .terms import ONE, Monomial, Poly, require_nonempty


@lru_cache(maxsize=1 << 16)
def derive_monomial(u: Monomial, j: int) -> Poly:
    """D_j(u) by the Leibniz rule.

    D_j(1) = 0, a single letter gains D_j in front, and a product splits on its
    first letter.  Unrolled, D_j(u) is the sum over positions of u with that
    position's letter hit by D_j; the summands are pairwise distinct, so every
    coefficient is 1.
    """
    terms = {}
    for k, d in enumerate(u):
        terms[u[:k] + (d.derived((j,)),) + u[k + 1:]] = 1
    return Poly(terms)


def derive_poly(f: Poly, jbar: Sequence[int]) -> Poly:
    """D^jbar(f) = D_{j1}(...D_{jn}(f)...), innermost operator applied first."""
    jbar = tuple(jbar)
    if not jbar:
        return f
    acc: dict = {}
    for u, c in f:
        for v, d in derive_word(u, jbar):
            acc[v] = acc.get(v, 0) + c * d
    return Poly._collect(acc)


@lru_cache(maxsize=1 << 16)
def derive_word(u: Monomial, jbar: tuple[int, ...]) -> Poly:
    """D^jbar(u) for a single monomial, cached."""
    if not jbar:
        return Poly.monomial(u)
    inner = derive_word(u, jbar[1:])
    acc: dict = {}
    for v, c in inner:
        for w, d in derive_monomial(v, jbar[0]):
            acc[w] = acc.get(w, 0) + c * d
    return Poly._collect(acc)


def leading_derived(u: Monomial, jbar: Sequence[int]) -> Monomial:
    """d^jbar(u): the leading monomial of D^jbar(u), for u != 1."""
    require_nonempty(u)
    return (u[0].derived(tuple(jbar)),) + u[1:]


def substitute(f: Poly, phi: Mapping[int, Poly]) -> Poly:
    """Image of ``f`` under the D-homomorphism extending ``phi`` (var rank -> Poly)."""
    out = Poly.zero()
    images: dict = {}
    for u, c in f:
        term = Poly.monomial(ONE, c)
        for d in u:
            img = images.get(d)
            if img is None:
                try:
                    base = phi[d.var]
                except KeyError:
                    raise UnboundVariable(f"no image for variable rank {d.var}") from None
                img = images[d] = derive_poly(base, d.ops)
            term = term * img
        out = out + term
    return out
