"""Gröbner-Shirshov bases for free differential algebras.

Exact rational arithmetic on differential polynomials, Leibniz derivations,
composition-based reduction and completion, a brute-force linear-algebra
oracle, and Lie-differential normal forms.
"""

from .completion import CompletionLimits, CompletionResult, complete, interreduce
from .derivation import derive_monomial, derive_poly, leading_derived, substitute
from .errors import (
    DiffGSBError,
    EmptyMonomial,
    InputError,
    InvalidLie,
    OutOfBound,
    ParseError,
    UnboundVariable,
    UnknownOperator,
    UnknownVariable,
    ZeroPolynomial,
)
from .lie import (
    LieStructure,
    enumerate_H,
    generate_s0,
    h_normal_form,
    validate_lie,
    verify_s0,
)
from .oracle import build_span, check_statement_ii, check_statement_iii, ideal_member
from .ordering import Cmp, cmp_diffword, cmp_monomial, weight
from .rewriting import (
    Composition,
    Occurrence,
    RewriteSystem,
    compositions,
    find_occurrences,
    irr_enumerate,
    is_gsb,
    is_trivial,
    reduce,
)
from .syntax import parse_polynomial, print_polynomial
from .terms import (
    ONE,
    Alphabet,
    Bound,
    DiffWord,
    Poly,
    leading_term,
    letter,
    make_monic,
    mul_monomial,
    poly_add,
    poly_mul,
    poly_scale,
)

__version__ = "0.1.0"
