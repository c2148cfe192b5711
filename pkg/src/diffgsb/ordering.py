"""The weight order on differential words and the deg-lex order on T."""

from __future__ import annotations

from enum import IntEnum
from typing import NamedTuple

from .terms import DiffWord, Monomial, monomial_key

__all__ = ["Cmp", "Weight", "weight", "cmp_diffword", "cmp_monomial", "monomial_key"]


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Weight(NamedTuple):
    """wt(D^i(x)) = (x; m, i1, ..., im)."""

    var: int
    m: int
    indices: tuple[int, ...]


def weight(d: DiffWord) -> Weight:
    return Weight(d.var, d.m, d.ops)


def _cmp(a, b) -> Cmp:
    if a < b:
        return Cmp.LT
    if a > b:
        return Cmp.GT
    return Cmp.EQ


def cmp_diffword(a: DiffWord, b: DiffWord) -> Cmp:
    # weights compare lexicographically; m precedes the indices, so index
    # strings of different length are never compared directly
    return _cmp(weight(a), weight(b))


def cmp_monomial(u: Monomial, v: Monomial) -> Cmp:
    return _cmp(monomial_key(u), monomial_key(v))
