"""Shirshov completion: saturate a rewrite system with its nontrivial compositions."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .rewriting import (
    Composition,
    RewriteSystem,
    compositions,
    first_occurrence,
    is_gsb,
    reduce,
)
from .terms import Monomial, Poly, make_monic, max_depth, monomial_key

CLOSED = "closed"
TRUNCATED = "truncated"


@dataclass(frozen=True)
class CompletionLimits:
    max_iterations: int = 500
    max_rule_length: int = 8
    max_op_depth: int = 8

    def __post_init__(self):
        if min(self.max_iterations, self.max_rule_length, self.max_op_depth) <= 0:
            raise ValueError("completion limits must be positive")


@dataclass(frozen=True)
class LogEntry:
    id: int
    kind: str
    w: Monomial
    result: str  # "trivial", "added", "stale"


@dataclass
class CompletionResult:
    status: str
    basis: RewriteSystem
    added: list[Poly] = field(default_factory=list)
    log: list[LogEntry] = field(default_factory=list)
    reason: str = ""


class _State:
    def __init__(self, rules):
        self.alive: dict[int, Poly] = {}
        self.ids = itertools.count()
        self.queue: list = []
        self.tick = itertools.count()
        for r in rules:
            self.alive[next(self.ids)] = r

    def system(self) -> RewriteSystem:
        return RewriteSystem(self.alive.values())

    def push(self, c: Composition, fid: int, gid: int):
        heapq.heappush(self.queue, (monomial_key(c.w), next(self.tick), fid, gid, c))

    def pair(self, fid: int, gid: int):
        for c in compositions(self.alive[fid], self.alive[gid]):
            self.push(c, fid, gid)


def complete(S: RewriteSystem, limits: CompletionLimits = CompletionLimits()) -> CompletionResult:
    """Worklist completion, smallest ambiguity word first.

    Each popped composition is reduced by the current basis; a nonzero
    remainder is made monic and added.  Stored rules whose leading monomial the
    new rule rewrites are pulled out, reduced, and re-added.  When the worklist
    drains, the basis is re-checked with :func:`is_gsb` before reporting
    ``closed``.
    """
    st = _State(S.rules)
    ids = list(st.alive)
    for fid in ids:
        for gid in ids:
            st.pair(fid, gid)

    added: list[Poly] = []
    log: list[LogEntry] = []
    iterations = 0

    def truncated(reason):
        return CompletionResult(TRUNCATED, st.system(), added, log, reason)

    while True:
        while st.queue:
            _, tick, fid, gid, c = heapq.heappop(st.queue)
            if fid not in st.alive or gid not in st.alive:
                log.append(LogEntry(tick, c.kind, c.w, "stale"))
                continue
            iterations += 1
            if iterations > limits.max_iterations:
                return truncated("max_iterations")
            r = reduce(c.value, st.system())
            if r.is_zero():
                log.append(LogEntry(tick, c.kind, c.w, "trivial"))
                continue
            log.append(LogEntry(tick, c.kind, c.w, "added"))
            pending = [make_monic(r)]
            while pending:
                new = pending.pop(0)
                new = reduce(new, st.system())
                if new.is_zero():
                    continue
                new = make_monic(new)
                if len(new.lead) > limits.max_rule_length:
                    return truncated("max_rule_length")
                if max_depth(new.lead) > limits.max_op_depth:
                    return truncated("max_op_depth")
                probe = RewriteSystem([new])
                for rid, s in list(st.alive.items()):
                    if first_occurrence(s.lead, probe) is not None:
                        del st.alive[rid]
                        pending.append(s)
                nid = next(st.ids)
                st.alive[nid] = new
                added.append(new)
                for oid in list(st.alive):
                    st.pair(nid, oid)
                    if oid != nid:
                        st.pair(oid, nid)
        report = is_gsb(st.system())
        if report.ok:
            return CompletionResult(CLOSED, st.system(), added, log)
        # compositions of rules that were rewritten mid-run can slip through
        rules = list(st.alive.items())
        for fid, f in rules:
            for gid, g in rules:
                if f is report.witness.f and g is report.witness.g:
                    st.pair(fid, gid)


def interreduce(S: RewriteSystem) -> RewriteSystem:
    """Rewrite until no leading monomial is reducible by the other rules."""
    rules = list(S.rules)
    changed = True
    while changed:
        changed = False
        for k, r in enumerate(rules):
            others = RewriteSystem(rules[:k] + rules[k + 1:])
            if first_occurrence(r.lead, others) is None:
                continue
            r2 = reduce(r, others)
            rules = rules[:k] + rules[k + 1:]
            if not r2.is_zero():
                rules.append(make_monic(r2))
            changed = True
            break
    return RewriteSystem(rules)
