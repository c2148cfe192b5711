"""Hypothesis strategies over a small alphabet: 2 variables, 2 operators."""

from fractions import Fraction

from hypothesis import strategies as st

from diffgsb.terms import Alphabet, DiffWord, Poly

ALPHA = Alphabet(("x", "y"), (1, 2))


def letters(max_depth=2, n_vars=2, n_ops=2):
    return st.builds(
        lambda v, ops: DiffWord(v, len(ops), tuple(ops)),
        st.integers(0, n_vars - 1),
        st.lists(st.integers(0, n_ops - 1), max_size=max_depth),
    )


def monomials(max_length=3, max_depth=2, **kw):
    return st.lists(letters(max_depth, **kw), max_size=max_length).map(tuple)


def nonempty_monomials(max_length=3, max_depth=2, **kw):
    return st.lists(letters(max_depth, **kw), min_size=1, max_size=max_length).map(tuple)


coefficients = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


def polys(max_terms=4, **kw):
    return st.lists(st.tuples(monomials(**kw), coefficients), max_size=max_terms).map(Poly)


def nonzero_polys(**kw):
    return polys(**kw).filter(lambda f: not f.is_zero())


def opwords(max_len=3, n_ops=2):
    return st.lists(st.integers(0, n_ops - 1), max_size=max_len).map(tuple)
