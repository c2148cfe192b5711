from fractions import Fraction

import pytest
from hypothesis import given

from diffgsb.errors import ParseError, UnknownOperator, UnknownVariable
from diffgsb.syntax import format_monomial, parse_polynomial, print_polynomial
from diffgsb.terms import ONE, Alphabet, Poly
from strategies import ALPHA, polys

HEIS = "D2 D1 (x) - D1 D2 (x) + D3 (x)"


def test_heisenberg_round_trip(x3):
    f = parse_polynomial(HEIS, x3)
    assert f.lead == (x3.letter("x", 2, 1),)
    assert f.coeff((x3.letter("x", 3),)) == 1
    assert f.coeff((x3.letter("x", 1, 2),)) == -1
    assert print_polynomial(f, x3) == HEIS


def test_one(xy):
    assert parse_polynomial("1", xy) == Poly.monomial(ONE)
    assert print_polynomial(Poly.one(), xy) == "1"


def test_fraction_coefficient(xy):
    f = parse_polynomial("2/3 * (x) * (y)", xy)
    assert f == Poly.monomial((xy.letter("x"), xy.letter("y")), Fraction(2, 3))


def test_printing(xy):
    assert print_polynomial(Poly.zero(), xy) == "0"
    assert print_polynomial(parse_polynomial("1/2 * (x)", xy), xy) == "1/2 * (x)"
    assert print_polynomial(parse_polynomial("-1 * (x) + (y)", xy), xy) == "-1 * (x) + (y)"
    assert print_polynomial(parse_polynomial("4/6 * (y) - 2 * (x)", xy), xy) == "-2 * (x) + 2/3 * (y)"


def test_whitespace_insensitive(x3):
    assert parse_polynomial("D2D1(x)-D1 D2( x )+D3(x)", x3) == parse_polynomial(HEIS, x3)


def test_multi_digit_operator():
    A = Alphabet(("x",), (1, 2, 12))
    f = parse_polynomial("D12 (x) + D1 D2 (x)", A)
    assert (A.letter("x", 12),) in f.as_dict()
    assert print_polynomial(f, A) in ("D1 D2 (x) + D12 (x)", "D12 (x) + D1 D2 (x)")
    assert parse_polynomial(print_polynomial(f, A), A) == f


def test_like_terms_collect(xy):
    assert parse_polynomial("(x) + (x) - 2 * (x)", xy).is_zero()


def test_format_monomial(xy12):
    u = (xy12.letter("x", 2, 1), xy12.letter("y"))
    assert format_monomial(u, xy12) == "D2 D1 (x) * (y)"
    assert format_monomial(ONE, xy12) == "1"


@pytest.mark.parametrize("text, pos", [
    ("(x) +", 5),
    ("(x) * * (y)", 6),
    ("2 / 0 * (x)", 4),
    ("(x", 2),
    ("(x) $ (y)", 4),
])
def test_syntax_errors(xy, text, pos):
    with pytest.raises(ParseError) as e:
        parse_polynomial(text, xy)
    assert e.value.pos == pos


def test_unknown_names(x3):
    with pytest.raises(UnknownVariable):
        parse_polynomial("(z)", x3)
    with pytest.raises(UnknownOperator):
        parse_polynomial("D4 (x)", x3)


@given(polys())
def test_round_trip(f):
    assert parse_polynomial(print_polynomial(f, ALPHA), ALPHA) == f
