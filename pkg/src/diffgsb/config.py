"""Session config and rules-file loading.

Config files are line oriented; ``#`` starts a comment::

    vars = x y
    operators = 1 2 3
    alpha 1 2 3 = 1
    alpha 2 1 3 = -1
    max_iterations = 500
    max_rule_length = 8
    max_op_depth = 8
    max_length = 2
    max_depth = 2
    lie_depth = 1

``vars`` and ``operators`` are listed in increasing order.  ``alpha i j r = c``
sets the structure constant alpha^r_ij (operator labels, exact rational c);
unlisted constants are 0.  Any other key is an error.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .completion import CompletionLimits
from .errors import InputError
from .lie import LieStructure
from .rewriting import RewriteSystem
from .syntax import parse_polynomial
from .terms import Alphabet, Bound, Poly, make_monic

log = logging.getLogger(__name__)

_INT_KEYS = ("max_iterations", "max_rule_length", "max_op_depth", "max_length", "max_depth", "lie_depth")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


@dataclass
class SessionConfig:
    alphabet: Alphabet
    lie: Optional[LieStructure] = None
    limits: CompletionLimits = field(default_factory=CompletionLimits)
    bound: Bound = Bound(2, 2)
    lie_depth: int = 1

    @property
    def vars(self):
        return self.alphabet.vars

    @property
    def operators(self):
        return self.alphabet.ops


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_config(text: str) -> SessionConfig:
    vars_: Optional[list[str]] = None
    ops: Optional[list[int]] = None
    alpha: dict = {}
    ints: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        words = key.split()
        if words and words[0] == "alpha":
            if len(words) != 4:
                raise InputError(f"config line {lineno}: expected 'alpha i j r = c'")
            try:
                i, j, r = (int(w) for w in words[1:])
            except ValueError:
                raise InputError(f"config line {lineno}: operator labels must be integers") from None
            if not _RATIONAL.match(value.replace(" ", "")):
                raise InputError(f"config line {lineno}: {value!r} is not an exact rational")
            alpha[(i, j, r)] = Fraction(value.replace(" ", ""))
        elif key == "vars":
            vars_ = value.split()
        elif key == "operators":
            try:
                ops = [int(w) for w in value.split()]
            except ValueError:
                raise InputError(f"config line {lineno}: operator labels must be integers") from None
        elif key in _INT_KEYS:
            try:
                ints[key] = int(value)
            except ValueError:
                raise InputError(f"config line {lineno}: {key} must be an integer") from None
        else:
            raise InputError(f"config line {lineno}: unknown key {key!r}")
    if not vars_:
        raise InputError("config must declare 'vars'")
    try:
        alphabet = Alphabet(tuple(vars_), tuple(ops or ()))
    except ValueError as e:
        raise InputError(str(e)) from None
    lie = None
    if alpha or "lie_depth" in ints:
        lie = LieStructure.from_labels(alphabet.ops, alpha)
    try:
        limits = CompletionLimits(
            ints.get("max_iterations", CompletionLimits.max_iterations),
            ints.get("max_rule_length", CompletionLimits.max_rule_length),
            ints.get("max_op_depth", CompletionLimits.max_op_depth),
        )
    except ValueError as e:
        raise InputError(str(e)) from None
    bound = Bound(ints.get("max_length", 2), ints.get("max_depth", 2))
    return SessionConfig(alphabet, lie, limits, bound, ints.get("lie_depth", 1))


def load_config(path: str | Path) -> SessionConfig:
    return parse_config(Path(path).read_text())


def parse_rules(text: str, alphabet: Alphabet) -> list[Poly]:
    """One polynomial per line; zero rules are rejected, others made monic."""
    rules = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        try:
            f = parse_polynomial(line, alphabet)
        except InputError as e:
            raise InputError(f"rules line {lineno}: {e}") from None
        if f.is_zero():
            raise InputError(f"rules line {lineno}: rule is 0")
        if f.lc != 1:
            log.warning("warning: rules line %d scaled by 1/%s to make it monic", lineno, f.lc)
            f = make_monic(f)
        rules.append(f)
    return rules


def load_rules(path: str | Path, alphabet: Alphabet) -> RewriteSystem:
    return RewriteSystem(parse_rules(Path(path).read_text(), alphabet))
