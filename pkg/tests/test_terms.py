from fractions import Fraction

import pytest
from hypothesis import given, settings

from diffgsb.derivation import derive_poly, substitute
from diffgsb.errors import UnboundVariable, ZeroPolynomial
from diffgsb.terms import (
    ONE,
    Alphabet,
    Bound,
    Poly,
    leading_term,
    make_monic,
    mul_monomial,
    poly_add,
    poly_mul,
    poly_scale,
)
from strategies import ALPHA, monomials, nonzero_polys, opwords, polys

A = ALPHA
x, y = A.letter("x"), A.letter("y")
d1x = A.letter("x", 1)
d2y = A.letter("y", 2)


def P(text, alphabet=A):
    return alphabet.parse(text)


class TestMonomials:
    def test_identity_left(self):
        assert mul_monomial(ONE, (d1x,)) == (d1x,)

    def test_concatenation(self):
        assert mul_monomial((d1x,), (d2y, x)) == (d1x, d2y, x)

    def test_identity_right(self):
        assert mul_monomial((x, x), ONE) == (x, x)

    @given(monomials(), monomials(), monomials())
    def test_associative(self, u, v, w):
        assert mul_monomial(mul_monomial(u, v), w) == mul_monomial(u, mul_monomial(v, w))
        assert len(mul_monomial(u, v)) == len(u) + len(v)


class TestArithmetic:
    def test_cancellation(self):
        assert poly_add(P("(x)"), P("-1 * (x)")).is_zero()

    def test_distributivity_example(self):
        assert poly_mul(P("(x) + (y)"), P("(x)")) == P("(x)*(x) + (y)*(x)")

    def test_exact_scaling(self):
        assert poly_scale(Fraction(2, 3), P("3 * (x)")) == P("2 * (x)")

    def test_no_floats(self):
        f = poly_scale(Fraction(1, 3), P("(x)"))
        assert all(isinstance(c, Fraction) for _, c in f)

    def test_zero_pruned(self):
        f = Poly({(x,): 0, (y,): 1})
        assert len(f) == 1

    @settings(max_examples=60)
    @given(polys(), polys(), polys())
    def test_ring_laws(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f + g == g + f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h
        assert f * Poly.one() == f == Poly.one() * f
        assert (f * Poly.zero()).is_zero()
        assert (f - f).is_zero()

    @given(nonzero_polys(), nonzero_polys())
    def test_leading_term_multiplicative(self, f, g):
        assert (f * g).lead == mul_monomial(f.lead, g.lead)

    @given(polys())
    def test_terms_strictly_decreasing(self, f):
        from diffgsb.terms import monomial_key

        keys = [monomial_key(u) for u in f.monomials()]
        assert keys == sorted(keys, reverse=True)
        assert len(set(keys)) == len(keys)


class TestLeadingTerm:
    def test_derivative_beats_bare(self):
        assert leading_term(P("2 * D1 (x) + (x)")) == ((d1x,), 2)

    def test_single(self):
        assert leading_term(P("(x)")) == ((x,), 1)

    def test_first_letter_decides(self, xy):
        # x > y in this alphabet
        f = P("(x)*(y) + (y)*(x)", xy)
        assert leading_term(f) == ((xy.letter("x"), xy.letter("y")), 1)

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomial):
            leading_term(Poly.zero())


class TestMakeMonic:
    def test_divide(self):
        assert make_monic(P("2 * D1 (x) + 4 * (x)")) == P("D1 (x) + 2 * (x)")

    def test_already_monic(self):
        assert make_monic(P("(x)")) == P("(x)")

    def test_negative(self, xy):
        assert make_monic(P("-1 * (x) + (y)", xy)) == P("(x) - (y)", xy)

    def test_zero_raises(self):
        with pytest.raises(ZeroPolynomial):
            make_monic(Poly.zero())


class TestSubstitute:
    def test_rename(self):
        assert substitute(P("(x)"), {0: P("(y)")}) == P("(y)")

    def test_leibniz_on_image(self):
        assert substitute(P("D1 (x)"), {0: P("(y)*(y)")}) == P("D1 (y) * (y) + (y) * D1 (y)")

    def test_ring_hom(self):
        got = substitute(P("(x)*(x)"), {0: P("(x) + (y)")})
        assert got == P("(x)*(x) + (x)*(y) + (y)*(x) + (y)*(y)")

    def test_unbound(self):
        with pytest.raises(UnboundVariable):
            substitute(P("(x) * (y)"), {0: P("(x)")})

    @settings(max_examples=40, deadline=None)
    @given(polys(max_terms=3, max_length=2, max_depth=1), polys(max_terms=2, max_length=2, max_depth=1),
           polys(max_terms=2, max_length=2, max_depth=1), opwords(max_len=2))
    def test_commutes_with_derivation(self, f, px, py, jbar):
        phi = {0: px, 1: py}
        assert substitute(derive_poly(f, jbar), phi) == derive_poly(substitute(f, phi), jbar)


def test_alphabet_enumeration_counts():
    # 2 vars x (1 + 2 + 4) operator strings = 14 letters
    assert len(A.letters(2)) == 14
    assert len(A.monomials(Bound(2, 2))) == 1 + 14 + 14 ** 2


def test_alphabet_rejects_duplicates():
    with pytest.raises(ValueError):
        Alphabet(("x", "x"))
    with pytest.raises(ValueError):
        Alphabet(("x",), (1, 1))
