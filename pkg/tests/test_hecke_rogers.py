import pytest
from hypothesis import given, strategies as st

from qrank.hecke_rogers import FORMS, enumeration_bound, filtered_sum, hr_lhs, hr_rhs, residue_filtered_sum
from qrank.qseries import series_equal
from qrank.theta import E, jprod

RANKIDS = ("rankid1", "rankid2", "rankid3", "rankid4")


@pytest.mark.parametrize("name", RANKIDS)
def test_symbolic_identity_low_order(name):
    n = 20
    assert series_equal(hr_lhs(name, "symbolic", n), hr_rhs(name, "symbolic", n), n).passed


@pytest.mark.parametrize("name", RANKIDS)
@pytest.mark.parametrize("z", [(5, 1), (5, 2), (7, 3)])
def test_specializing_commutes_with_summation(name, z):
    n = 25
    sym = hr_rhs(name, "symbolic", n).specialize_z(*z)
    assert series_equal(hr_rhs(name, z, n), sym, n).passed


def test_z_equal_one_gives_eta_products():
    n = 40
    e2 = E(n) ** 2
    assert series_equal(hr_rhs("rankid1", 1, n), e2, n).passed
    assert series_equal(hr_rhs("rankid3", 1, n), e2.scale(2), n).passed
    assert series_equal(hr_rhs("rankid2", 1, n), jprod(n, eta=((1, 3), (2, -1))), n).passed


@given(st.sampled_from(RANKIDS), st.sampled_from([2, 3, 5]))
def test_residue_classes_partition_the_sum(name, p):
    n = 15
    total = None
    for a in range(p):
        for b in range(p):
            part = residue_filtered_sum(name, p, {(a, b)}, "symbolic", n)
            total = part if total is None else total + part
    assert series_equal(total, hr_rhs(name, "symbolic", n), n).passed


@given(st.sampled_from(RANKIDS), st.integers(0, 3))
def test_filter_and_complement_add_up(name, r):
    n = 15

    def keep(nn, jj, raw, ze):
        return (nn + jj + r) % 2 == 0

    a = filtered_sum(name, keep, "symbolic", n)
    b = filtered_sum(name, lambda *t: not keep(*t), "symbolic", n)
    assert series_equal(a + b, hr_rhs(name, "symbolic", n), n).passed


def test_empty_residue_set_is_zero():
    assert residue_filtered_sum("rankid1", 5, set(), "symbolic", 10).is_zero()


@given(st.sampled_from(sorted(FORMS)), st.integers(0, 80), st.integers(1, 3), st.integers(-3, 3))
def test_enumeration_bound_covers_the_truncation(name, trunc, k, t):
    form = FORMS[name]
    B = enumeration_bound(form, trunc, k, t)
    # any layer beyond B has total exponent k*c*n^2 - |t|(2n+1) > trunc
    nn = B + 1
    assert k * form.c * nn * nn - abs(t) * (2 * nn + 1) > trunc
