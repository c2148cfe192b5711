"""Command-line front end.

Exit status: 0 on success/PASS, 1 when a check fails or completion is
truncated, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Optional, Sequence

from . import lie as lie_mod
from .completion import CLOSED, CompletionLimits, complete
from .config import SessionConfig, load_config, load_rules
from .errors import DiffGSBError
from .oracle import build_span, check_statement_ii, check_statement_iii
from .rewriting import Composition, RewriteSystem, all_compositions, irr_enumerate, is_gsb, reduce
from .syntax import format_monomial, parse_polynomial, print_polynomial
from .terms import Bound, Poly

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Out:
    """Collects text lines or a JSON document for one command."""

    def __init__(self, cfg: SessionConfig, as_json: bool):
        self.cfg = cfg
        self.as_json = as_json
        self.lines: list[str] = []
        self.doc: dict = {}

    def poly(self, f: Poly) -> str:
        return print_polynomial(f, self.cfg.alphabet)

    def mono(self, u) -> str:
        return format_monomial(u, self.cfg.alphabet)

    def labels(self, ranks) -> list[int]:
        return [self.cfg.alphabet.ops[k] for k in ranks]

    def composition(self, c: Composition) -> dict:
        return {
            "kind": c.kind,
            "f": c.f_index + 1,
            "g": c.g_index + 1,
            "w": self.mono(c.w),
            "value": self.poly(c.value),
        }

    def render(self) -> str:
        if self.as_json:
            return json.dumps(self.doc, indent=2, sort_keys=True) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _rules(args, cfg) -> RewriteSystem:
    return load_rules(args.rules, cfg.alphabet)


def _lie(cfg: SessionConfig):
    if cfg.lie is None:
        raise DiffGSBError("config has no structure constants ('alpha i j r = c' lines)")
    return cfg.lie


def cmd_nf(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    f = parse_polynomial(args.poly, cfg.alphabet)
    nf = out.poly(reduce(f, S))
    out.doc = {"input": out.poly(f), "normal_form": nf}
    out.lines.append(nf)
    return EXIT_OK


def cmd_compositions(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    comps = [out.composition(c) for c in all_compositions(S)]
    out.doc = {"compositions": comps}
    for c in comps:
        out.lines.append(f"{c['kind']} f={c['f']} g={c['g']} w={c['w']} value={c['value']}")
    return EXIT_OK


def cmd_gsb_check(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    rep = is_gsb(S)
    if rep.ok:
        out.doc = {"result": "PASS", "checked": rep.checked}
        out.lines.append(f"PASS ({rep.checked} compositions reduce to 0)")
        return EXIT_OK
    wit = out.composition(rep.witness)
    wit["remainder"] = out.poly(rep.remainder)
    out.doc = {"result": "FAIL", "checked": rep.checked, "witness": wit}
    out.lines += [
        "FAIL",
        f"kind: {wit['kind']}",
        f"f: rule {wit['f']}: {out.poly(rep.witness.f)}",
        f"g: rule {wit['g']}: {out.poly(rep.witness.g)}",
        f"w: {wit['w']}",
        f"value: {wit['value']}",
        f"remainder: {wit['remainder']}",
    ]
    return EXIT_FAIL


def cmd_complete(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    lim = cfg.limits
    limits = CompletionLimits(
        args.max_iter or lim.max_iterations,
        args.max_len or lim.max_rule_length,
        args.max_depth or lim.max_op_depth,
    )
    res = complete(S, limits)
    basis = [out.poly(f) for f in res.basis]
    out.doc = {
        "status": res.status,
        "reason": res.reason,
        "processed": len(res.log),
        "added": [out.poly(f) for f in res.added],
        "basis": basis,
    }
    out.lines.append(f"status: {res.status}" + (f" ({res.reason})" if res.reason else ""))
    out.lines.append(f"added: {len(res.added)}")
    out.lines.append("basis:")
    out.lines += [f"  {f}" for f in basis]
    return EXIT_OK if res.status == CLOSED else EXIT_FAIL


def _bound(args, cfg) -> Bound:
    return Bound(
        cfg.bound.max_length if args.max_len is None else args.max_len,
        cfg.bound.max_depth if args.max_depth is None else args.max_depth,
    )


def cmd_irr(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    mons = [out.mono(u) for u in irr_enumerate(S, cfg.alphabet, _bound(args, cfg))]
    out.doc = {"count": len(mons), "irr": mons}
    out.lines += mons
    return EXIT_OK


def cmd_lie_verify(args, cfg, out: _Out) -> int:
    L = _lie(cfg)
    depth = cfg.lie_depth if args.depth is None else args.depth
    check = lie_mod.validate_lie(L)
    if not check:
        wit = out.labels(check.witness)
        out.doc = {"lie": "FAIL", "violation": check.kind, "at": wit}
        out.lines.append(f"lie: FAIL ({check.kind} at {' '.join(map(str, wit))})")
        return EXIT_FAIL
    rep = lie_mod.verify_s0(L, len(cfg.vars), depth)
    out.doc = {
        "lie": "PASS",
        "s0": "PASS" if rep.ok else "FAIL",
        "depth": depth,
        "rules": rep.rules,
        "checked": rep.report.checked,
        "triples": [out.labels(t) for t in rep.triples],
    }
    out.lines.append("lie: PASS")
    if rep.ok:
        out.lines.append(f"s0: PASS (depth {depth}, {rep.rules} rules, {rep.report.checked} compositions)")
        return EXIT_OK
    out.doc["witness"] = {"w": out.mono(rep.witness.w), "remainder": out.poly(rep.remainder)}
    out.lines.append(f"s0: FAIL at w={out.mono(rep.witness.w)} remainder={out.poly(rep.remainder)}")
    return EXIT_FAIL


def cmd_lie_nf(args, cfg, out: _Out) -> int:
    L = _lie(cfg)
    f = parse_polynomial(args.poly, cfg.alphabet)
    nf = out.poly(lie_mod.h_normal_form(f, L))
    out.doc = {"input": out.poly(f), "normal_form": nf}
    out.lines.append(nf)
    return EXIT_OK


def cmd_oracle_check(args, cfg, out: _Out) -> int:
    S = _rules(args, cfg)
    bound = _bound(args, cfg)
    span = build_span(S, cfg.alphabet, bound)
    ii = check_statement_ii(S, span)
    iii = check_statement_iii(S, span, cfg.alphabet)
    out.doc = {
        "bound": {"max_length": bound.max_length, "max_depth": bound.max_depth},
        "rank": span.rank,
        "statement_ii": "PASS" if ii else "FAIL",
        "statement_iii": "PASS" if iii else "FAIL",
        "monomials": iii.detail["monomials"],
        "irr": iii.detail["irr"],
    }
    out.lines.append(f"bound: length <= {bound.max_length}, depth <= {bound.max_depth}")
    if ii:
        out.lines.append(f"statement ii: PASS (rank {span.rank})")
    else:
        out.doc["statement_ii_witness"] = out.poly(ii.witness)
        out.lines.append(f"statement ii: FAIL (irreducible leading term in {out.poly(ii.witness)})")
    d = iii.detail
    if iii:
        out.lines.append(f"statement iii: PASS ({d['monomials']} monomials = {d['irr']} irreducible + {d['rank']} rank)")
    else:
        half, u = iii.witness
        out.doc["statement_iii_witness"] = {"half": half, "monomial": out.mono(u)}
        out.lines.append(f"statement iii: FAIL ({half} at {out.mono(u)})")
    return EXIT_OK if ii and iii else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diffgsb", description="Gröbner-Shirshov bases for free differential algebras")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, rules: bool = True, help: str = ""):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--config", required=True, help="session config file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if rules:
            sp.add_argument("--rules", required=True, help="rules file, one polynomial per line")
        sp.set_defaults(func=func)
        return sp

    add("nf", cmd_nf, help="normal form modulo the rules").add_argument("poly")
    add("compositions", cmd_compositions, help="list all compositions")
    add("gsb-check", cmd_gsb_check, help="check the Gröbner-Shirshov property")
    sp = add("complete", cmd_complete, help="run completion")
    sp.add_argument("--max-iter", type=int)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--max-depth", type=int)
    for name, func, h in (("irr", cmd_irr, "list irreducible monomials"),
                          ("oracle-check", cmd_oracle_check, "linear-algebra cross-check")):
        sp = add(name, func, help=h)
        sp.add_argument("--max-len", type=int)
        sp.add_argument("--max-depth", type=int)
    add("lie-verify", cmd_lie_verify, rules=False, help="validate constants and verify S_0").add_argument(
        "--depth", type=int)
    add("lie-nf", cmd_lie_nf, rules=False, help="normal form in the free Lie-differential algebra").add_argument(
        "poly")
    return p


def run_command(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger = logging.getLogger("diffgsb")
    logger.addHandler(handler)
    try:
        cfg = load_config(args.config)
        out = _Out(cfg, args.json)
        code = args.func(args, cfg, out)
    except (DiffGSBError, OSError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_INPUT
    finally:
        logger.removeHandler(handler)
    stdout.write(out.render())
    return code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
