import pytest
from hypothesis import given, strategies as st

from qrank.coeff_rings import LaurentPoly
from qrank.errors import NonGenericError
from qrank.qseries import series_equal, series_inv
from qrank.rank_appell import (
    appell_m, f_abc, f_abc_naive, g_abc, partition_counts, rank_oracle, rank_series_R,
)
from qrank.theta import E, Q, Z, ParamSpec, qpow, zeta
from qrank.verifier.checks import appell_oracle

DP = rank_oracle(60)
ENUM = rank_oracle(30, method="enumerate")


def test_dp_matches_enumeration():
    for n in range(31):
        assert DP.row(n) == ENUM.row(n)


@given(st.integers(0, 60), st.integers(-20, 20))
def test_rank_symmetry(n, m):
    assert DP.N(m, n) == DP.N(-m, n)


@given(st.integers(0, 60), st.sampled_from([2, 3, 5, 7, 11]))
def test_residue_classes_sum_to_p(n, t):
    cl = DP.classes(t, n)
    assert len(cl) == t and sum(cl) == DP.p(n)
    # the rank is symmetric, so class r and class -r agree
    assert all(cl[r] == cl[-r % t] for r in range(t))


def test_partition_counts_large_values():
    p = partition_counts(200)
    assert p[100] == 190569292
    assert p[200] == 3972999029388


def test_small_rank_row():
    # partitions of 4: 4, 31, 22, 211, 1111
    assert DP.row(4) == {3: 1, 1: 1, 0: 1, -1: 1, -3: 1}


def test_rank_generating_function_counts_ranks():
    n = 25
    R = rank_series_R("symbolic", 1, "eisenstein", n)
    for k in range(n + 1):
        c = R.coeff(k)
        got = c.c if isinstance(c, LaurentPoly) else {0: c}
        assert got == DP.row(k)


def test_lambert_and_eisenstein_forms_agree():
    n = 30
    assert series_equal(rank_series_R("symbolic", 1, "eisenstein", n),
                        rank_series_R("symbolic", 1, "lambert", n), n).passed


def test_rank_function_at_one_is_partition_generating_function():
    n = 40
    assert series_equal(rank_series_R(1, 1, "eisenstein", n), series_inv(E(n)), n).passed


APPELL_ARGS = st.sampled_from([
    (zeta(5, 2), zeta(5) * Q), (zeta(7), zeta(7, 3) * Q**2), (zeta(5) * Q, zeta(5, 2)),
    (zeta(7, 2) * Q, zeta(7) * Q), (zeta(5, 3) * Q**-1, zeta(5, 4) * Q),
])


@given(APPELL_ARGS)
def test_appell_lerch_against_box_oracle(xz):
    x, z = xz
    n = 20
    assert series_equal(appell_m(x, 1, z, n), appell_oracle(x, z, n), n).passed


@pytest.mark.parametrize("k", [0, 1, -2])
def test_appell_lerch_refuses_theta_zero(k):
    with pytest.raises(NonGenericError):
        appell_m(zeta(5), 1, qpow(k), 10)


def test_appell_lerch_refuses_pole():
    # 1 - q^(r-1) x z vanishes at r = 1 when x z = 1
    with pytest.raises(NonGenericError):
        appell_m(zeta(5, 2), 1, zeta(5, 3), 10)


FABC_ARGS = st.sampled_from([
    (zeta(5) * Q, zeta(5, 3) * Q**2), (zeta(7, 2) * Q, zeta(7) * Q), (zeta(5, 4) * Q**2, zeta(5, 2) * Q),
    (Z * Q, Z**2 * Q),
])


@given(FABC_ARGS)
def test_f121_against_naive_double_loop(xy):
    x, y = xy
    n = 15
    assert series_equal(f_abc(1, 2, 1, x, y, n), f_abc_naive(1, 2, 1, x, y, n, box=20), n).passed


def test_f121_equals_theta_appell_expansion_with_z1_y_over_x():
    x, y = zeta(5, 4) * Q, zeta(5, 3) * Q
    n = 20
    assert series_equal(f_abc(1, 2, 1, x, y, n), g_abc(1, 2, 1, x, y, y / x, x / y, n), n).passed


def test_f121_expansion_with_z1_y_over_x_squared_is_not_an_identity():
    x, y = zeta(5, 4) * Q, zeta(5, 3) * Q
    n = 20
    r = series_equal(f_abc(1, 2, 1, x, y, n), g_abc(1, 2, 1, x, y, y / x**2, x / y, n), n)
    assert r.status == "FAIL"


def test_paramspec_arithmetic():
    a = zeta(5, 2) * Z * Q**3
    assert a * a.inverse() == ParamSpec(1, 0, 0)
    assert (a**2).q == 6 and (a**2).z == 2
    with pytest.raises(ValueError):
        ParamSpec(2, 0, 0)
