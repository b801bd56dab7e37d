"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from caforge.fields import GF, QQ
from caforge.poly import MPoly, UPoly

FIELDS = [QQ, GF(5), GF(7)]


def elements(field):
    if field == QQ:
        return st.fractions(min_value=-20, max_value=20, max_denominator=6)
    return st.integers(0, field.p - 1)


@st.composite
def mpolys(draw, field, nvars, max_deg=3, max_terms=5):
    n_terms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n_terms):
        e = tuple(draw(st.lists(st.integers(0, max_deg), min_size=nvars, max_size=nvars)))
        if sum(e) > max_deg:
            continue
        terms[e] = draw(elements(field))
    return MPoly(field, nvars, terms)


@st.composite
def upolys(draw, field, max_deg=5):
    cs = draw(st.lists(elements(field), min_size=0, max_size=max_deg + 1))
    return UPoly(field, cs)


def as_fraction(c):
    return Fraction(c)
