"""Hypothesis strategies shared across the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from eqclass.cyclotomic import Cyclotomic, cyclotomic_polynomial
from eqclass.ycoeff import YCoeff

small_q = st.fractions(min_value=-6, max_value=6, max_denominator=6)
conductors = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12])


@st.composite
def cyclotomics(draw, conductor=None):
    n = draw(conductors) if conductor is None else conductor
    deg = len(cyclotomic_polynomial(n)) - 1
    return Cyclotomic.from_coeffs(n, draw(st.lists(small_q, min_size=deg, max_size=deg)))


@st.composite
def ycoeffs(draw, max_denom=2):
    lo = draw(st.integers(-1, 1))
    n = draw(st.integers(0, 3))
    terms = {lo + i: draw(cyclotomics()) for i in range(n)}
    return YCoeff(terms, draw(st.integers(0, max_denom)))


def frac(s: str) -> Fraction:
    return Fraction(s)
