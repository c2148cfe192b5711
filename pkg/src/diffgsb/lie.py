"""Lie-differential algebras: the sorting system S_0 built from structure constants.

For a Lie algebra with basis D_1 < ... < D_n and brackets
[D_i, D_j] = sum_r alpha^r_ij D_r, the rules

    D_p D_q D^i(x) -> D_q D_p D^i(x) + sum_r alpha^r_pq D_r D^i(x)     (p > q, i nondecreasing)

form a Gröbner-Shirshov basis, and the monomials whose letters carry
nondecreasing operator strings give the normal forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional

from .errors import InvalidLie
from .rewriting import INCLUSION_OUTER, Composition, GSBReport, RewriteSystem, is_gsb, reduce
from .terms import Alphabet, Bound, DiffWord, Monomial, Poly, max_depth, monomial_key


@dataclass(frozen=True)
class LieStructure:
    """Structure constants on operator ranks 0..dim-1.

    ``alpha`` holds the nonzero entries (i, j, r) -> alpha^r_ij; it is stored as
    a sorted tuple so the structure is hashable.
    """

    dim: int
    alpha: tuple = ()

    def __post_init__(self):
        items = self.alpha.items() if isinstance(self.alpha, Mapping) else self.alpha
        clean = {}
        for (i, j, r), c in items:
            for k in (i, j, r):
                if not 0 <= k < self.dim:
                    raise InvalidLie(f"operator rank {k} outside 0..{self.dim - 1}")
            c = Fraction(c)
            if c:
                clean[(i, j, r)] = c
        object.__setattr__(self, "alpha", tuple(sorted(clean.items())))

    @classmethod
    def from_labels(cls, ops, alpha: Mapping) -> "LieStructure":
        """Build from operator labels, e.g. ``from_labels([1, 2, 3], {(1, 2, 3): 1, (2, 1, 3): -1})``."""
        ops = list(ops)
        rank = {j: k for k, j in enumerate(ops)}
        try:
            ranked = {(rank[i], rank[j], rank[r]): c for (i, j, r), c in alpha.items()}
        except KeyError as e:
            raise InvalidLie(f"structure constant mentions undeclared operator {e.args[0]}") from None
        return cls(len(ops), ranked)

    def table(self) -> dict:
        return dict(self.alpha)

    def const(self, i: int, j: int, r: int) -> Fraction:
        return self.table().get((i, j, r), Fraction(0))

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """[D_i, D_j] as {r: alpha^r_ij}."""
        return {r: c for (a, b, r), c in self.alpha if a == i and b == j}

    def jacobi_defect(self, i: int, j: int, k: int, t: int) -> Fraction:
        """sum_s a^s_ij a^t_sk + a^s_ki a^t_sj + a^s_jk a^t_si."""
        a = self.table()
        get = lambda x, y, z: a.get((x, y, z), 0)  # noqa: E731
        return sum(
            (get(i, j, s) * get(s, k, t) + get(k, i, s) * get(s, j, t) + get(j, k, s) * get(s, i, t)
             for s in range(self.dim)),
            Fraction(0),
        )


def abelian(dim: int) -> LieStructure:
    return LieStructure(dim, {})


def heisenberg() -> LieStructure:
    """[D1, D2] = D3, D3 central (ranks 0, 1, 2)."""
    return LieStructure(3, {(0, 1, 2): 1, (1, 0, 2): -1})


def sl2() -> LieStructure:
    """[D1, D2] = 2 D2, [D1, D3] = -2 D3, [D2, D3] = D1 (ranks 0, 1, 2)."""
    return LieStructure(3, {
        (0, 1, 1): 2, (1, 0, 1): -2,
        (0, 2, 2): -2, (2, 0, 2): 2,
        (1, 2, 0): 1, (2, 1, 0): -1,
    })


@dataclass
class LieCheck:
    ok: bool
    kind: str = ""
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_lie(L: LieStructure) -> LieCheck:
    """Antisymmetry on every (i, j, s), then Jacobi on every (i, j, k, t)."""
    n = L.dim
    a = L.table()
    for i, j, s in itertools.product(range(n), repeat=3):
        if a.get((i, j, s), 0) != -a.get((j, i, s), 0):
            return LieCheck(False, "antisymmetry", (i, j, s))
    for i, j, k, t in itertools.product(range(n), repeat=4):
        if L.jacobi_defect(i, j, k, t):
            return LieCheck(False, "jacobi", (i, j, k, t))
    return LieCheck(True)


def _require_lie(L: LieStructure) -> None:
    check = validate_lie(L)
    if not check:
        raise InvalidLie(f"{check.kind} fails at {check.witness}")


def nondecreasing(ops: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(ops, ops[1:]))


def s0_rule(L: LieStructure, x: int, p: int, q: int, tail: tuple[int, ...]) -> Poly:
    """D_p D_q D^tail(x) - D_q D_p D^tail(x) - sum_r alpha^r_pq D_r D^tail(x)."""
    m = len(tail)
    lead = (DiffWord(x, m + 2, (p, q) + tail),)
    terms = {lead: 1, (DiffWord(x, m + 2, (q, p) + tail),): -1}
    for r, c in L.bracket(p, q).items():
        u = (DiffWord(x, m + 1, (r,) + tail),)
        terms[u] = terms.get(u, 0) - c
    f = Poly(terms)
    # the leading monomial is assumed, not trusted
    if f.lead != lead or f.lc != 1:
        raise AssertionError(f"S_0 leading term is not D_{p} D_{q} ... for tail {tail}")
    return f


@lru_cache(maxsize=64)
def _s0(L: LieStructure, n_vars: int, depth: int) -> RewriteSystem:
    rules = []
    for x in range(n_vars):
        for m in range(depth + 1):
            for tail in itertools.combinations_with_replacement(range(L.dim), m):
                for p in range(L.dim):
                    for q in range(p):
                        rules.append(s0_rule(L, x, p, q, tail))
    return RewriteSystem(rules)


def generate_s0(L: LieStructure, n_vars: int, depth: int, check: bool = True) -> RewriteSystem:
    """All S_0 rules over ``n_vars`` variables whose sorted tail has at most
    ``depth`` operators."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if check:
        _require_lie(L)
    return _s0(L, n_vars, depth)


def s0_size(dim: int, n_vars: int, depth: int) -> int:
    from math import comb

    return n_vars * comb(dim, 2) * sum(comb(dim + m - 1, m) for m in range(depth + 1))


@dataclass
class S0Report:
    ok: bool
    depth: int
    rules: int
    report: GSBReport
    triples: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    @property
    def witness(self) -> Optional[Composition]:
        return self.report.witness

    @property
    def remainder(self) -> Optional[Poly]:
        return self.report.remainder


def verify_s0(L: LieStructure, n_vars: int, depth: int, check: bool = True) -> S0Report:
    """is_gsb on S_0 generated one level deeper than ``depth``, restricted to
    ambiguity words with at most depth + 3 operators on any letter.

    The extra generation level keeps every reducer that the sorting argument
    needs inside the truncated system.
    """
    if check:
        _require_lie(L)
    S = generate_s0(L, n_vars, depth + 1, check=False)
    ceiling = depth + 3
    triples = set()

    def accept(c: Composition) -> bool:
        if max_depth(c.w) > ceiling:
            return False
        if c.kind == INCLUSION_OUTER and c.jbar:
            ops = c.f.lead[0].ops
            if len(ops) >= 3:
                triples.add(ops[:3])
        return True

    report = is_gsb(S, accept)
    return S0Report(report.ok, depth, len(S), report, sorted(triples))


def enumerate_H(n_vars: int, n_ops: int, bound: Bound) -> list[Monomial]:
    """Monomials in bound whose every letter has a nondecreasing operator string."""
    letters = [
        DiffWord(x, m, ops)
        for x in range(n_vars)
        for m in range(bound.max_depth + 1)
        for ops in itertools.combinations_with_replacement(range(n_ops), m)
    ]
    letters.sort()
    out: list[Monomial] = []
    for n in range(bound.max_length + 1):
        out.extend(itertools.product(letters, repeat=n))
    return out


def h_normal_form(f: Poly, L: LieStructure, check: bool = True) -> Poly:
    """Normal form of f in the free Lie-differential algebra, supported on H*."""
    if check:
        _require_lie(L)
    if f.is_zero():
        return f
    n_vars = 1 + max((d.var for u in f.monomials() for d in u), default=-1)
    d = max((max_depth(u) for u in f.monomials()), default=0)
    # reduction never raises operator counts, so rules with at most d - 2
    # tail operators cover every rewrite
    S = generate_s0(L, max(n_vars, 1), max(d - 2, 0), check=False)
    return reduce(f, S)


def alphabet_for(L: LieStructure, vars=("x",), labels=None) -> Alphabet:
    labels = tuple(range(1, L.dim + 1)) if labels is None else tuple(labels)
    return Alphabet(tuple(vars), labels)


__all__ = [
    "LieStructure", "LieCheck", "S0Report", "abelian", "heisenberg", "sl2",
    "validate_lie", "generate_s0", "s0_rule", "s0_size", "verify_s0",
    "enumerate_H", "h_normal_form", "nondecreasing", "alphabet_for",
]
