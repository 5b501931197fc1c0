from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrank.coeff_rings import QQ, ZZ, CycloNum, LaurentPoly, cyclo, laurent
from qrank.errors import NotInvertibleError, PrecisionError
from qrank.qseries import (
    QSeries, a_op, atkin_U, conv_fast, conv_generic, dissect, reassemble, series_equal, series_inv,
    series_mul, u_star,
)

from strategies import cyclonums, int_series, laurent_polys, small_ints, unit_series


def coeff_lists(elem):
    return st.lists(elem, min_size=1, max_size=14)


@given(coeff_lists(small_ints), coeff_lists(small_ints), st.integers(1, 20))
def test_fast_product_matches_schoolbook_integers(a, b, n):
    assert conv_fast(a, b, ZZ, n) == conv_generic(a, b, n)


@given(coeff_lists(cyclonums(7)), coeff_lists(cyclonums(7)), st.integers(1, 16))
def test_fast_product_matches_schoolbook_cyclotomic(a, b, n):
    assert conv_fast(a, b, cyclo(7), n) == conv_generic(a, b, n)


@given(coeff_lists(laurent_polys()), coeff_lists(laurent_polys()), st.integers(1, 12))
def test_fast_product_matches_schoolbook_laurent(a, b, n):
    assert conv_fast(a, b, laurent(), n) == conv_generic(a, b, n)


@given(coeff_lists(st.fractions(max_denominator=7, min_value=-3, max_value=3)),
       coeff_lists(st.fractions(max_denominator=7, min_value=-3, max_value=3)), st.integers(1, 12))
def test_fast_product_matches_schoolbook_rationals(a, b, n):
    assert conv_fast(a, b, QQ, n) == conv_generic(a, b, n)


@given(int_series(), int_series())
def test_product_precision_rule(f, g):
    h = f * g
    assert h.trunc == min(f.trunc + g.lower, g.trunc + f.lower)
    assert h == series_mul(f, g, fast=False)


@given(unit_series())
def test_inverse_round_trip(f):
    g = series_inv(f)
    one = f * g
    assert series_equal(one, QSeries([1], trunc=one.trunc), one.trunc).passed


def test_inverse_needs_a_unit_leading_coefficient():
    with pytest.raises(NotInvertibleError):
        series_inv(QSeries([2, 1], trunc=5))
    with pytest.raises(NotInvertibleError):
        series_inv(QSeries.zero(5))


@given(int_series(max_len=20), st.integers(2, 7))
def test_dissection_round_trip(f, p):
    parts = dissect(f, p)
    assert len(parts) == p
    back = reassemble(parts)
    assert series_equal(back, f, min(back.trunc, f.trunc)).passed


@given(int_series(max_len=20), st.integers(2, 5), st.integers(0, 4))
def test_atkin_and_sift_operators_agree(f, p, r):
    r %= p
    kept = u_star(f, p, r)
    assert all((e - r) % p == 0 for e, _ in kept.items())
    assert a_op(kept, p, r) == atkin_U(f, p, r)


def test_a_op_rejects_mixed_residues():
    with pytest.raises(ValueError):
        a_op(QSeries([1, 1], trunc=4), 2, 0)


@given(int_series(), st.integers(1, 4))
def test_substitution_spreads_coefficients(f, k):
    g = f.substitute_qpower(k)
    assert g.trunc == k * f.trunc + k - 1
    for e in range(f.lower, f.trunc + 1):
        assert g.coeff(k * e) == f.coeff(e)


def test_binomial_factors_are_inverse():
    f = QSeries([1, 2, -1, 4, 0, 3], trunc=9)
    w = CycloNum.zeta(5)
    g = f.mul_binomial(w, 2).div_binomial(w, 2)
    assert series_equal(g, f.change_ring(cyclo(5)), 9).passed


def test_series_equal_reports_first_mismatch_and_precision():
    f = QSeries([1, 2, 3, 4], trunc=5)
    g = QSeries([1, 2, 0, 4], trunc=5)
    r = series_equal(f, g, 5)
    assert r.status == "FAIL" and r.first_mismatch.exponent == 2
    with pytest.raises(PrecisionError):
        series_equal(f, g, 6)


def test_render_shows_big_o():
    f = QSeries([1, -1, 0, 2], lower=-1, trunc=4)
    assert f.render() == "q^-1 - 1 + 2*q^2 + O(q^5)"
    z = LaurentPoly.z()
    assert "z^-1" in QSeries([1, z + z**-1], trunc=2).render()


def test_immutable():
    f = QSeries([1, 2], trunc=3)
    with pytest.raises(AttributeError):
        f.trunc = 7


def test_assert_integral():
    QSeries([Fraction(4, 2), 3], trunc=2).assert_integral()
    with pytest.raises(ValueError):
        QSeries([Fraction(1, 2)], trunc=2).assert_integral()
