"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from qrank.coeff_rings import CycloNum, LaurentPoly
from qrank.qseries import QSeries

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
primes = st.sampled_from([3, 5, 7, 11])


@st.composite
def cyclonums(draw, p=None, coeffs=small_ints):
    p = p if p is not None else draw(primes)
    return CycloNum(p, draw(st.lists(coeffs, min_size=0, max_size=p - 1)))


@st.composite
def laurent_polys(draw, coeffs=small_ints):
    d = draw(st.dictionaries(st.integers(-4, 4), coeffs, max_size=5))
    return LaurentPoly(d)


@st.composite
def int_series(draw, max_len=12, lower=st.integers(-3, 3)):
    cs = draw(st.lists(small_ints, min_size=1, max_size=max_len))
    return QSeries(cs, lower=draw(lower))


@st.composite
def unit_series(draw, max_len=12):
    """Integer series whose leading coefficient is +-1, hence invertible."""
    cs = draw(st.lists(small_ints, min_size=0, max_size=max_len - 1))
    lead = draw(st.sampled_from([1, -1]))
    return QSeries([lead] + cs, lower=draw(st.integers(-2, 2)))
