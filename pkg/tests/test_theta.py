import random

import pytest
from hypothesis import given, strategies as st

from qrank.coeff_rings import LaurentPoly
from qrank.qseries import series_equal, series_inv
from qrank.rank_appell import mul_spec
from qrank.theta import (
    DISSECTION_LEMMAS, E, J, ParamSpec, Q, Z, dissection_lemma_lhs, dissection_lemma_rhs, jprod, jtheta,
    pentagonal_E, pochhammer, qpow, theta4, theta4_sum, zeta, zq_product,
)

# p(n) for n = 0..20
PARTITIONS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]


@st.composite
def param_specs(draw):
    p = draw(st.sampled_from([1, 5, 7]))
    unit = 1 if p == 1 else zeta(p, draw(st.integers(1, p - 1))).unit
    sign = draw(st.sampled_from([1, -1]))
    return ParamSpec(sign * unit, draw(st.integers(-2, 2)), draw(st.integers(-3, 3)))


@given(param_specs(), st.integers(1, 3))
def test_triple_product_sum_equals_product(a, b):
    n = 25
    base = qpow(b)
    assert series_equal(jtheta(a, base, "sum", n), jtheta(a, base, "product", n), n).passed


@given(st.integers(-6, 6), st.integers(1, 3))
def test_theta_vanishes_at_integer_powers_of_the_base(k, b):
    f = jtheta(qpow(k * b), qpow(b), "product", 20)
    assert f.is_zero()


@given(param_specs())
def test_theta_reflection(a):
    # j(x; q) = -x j(x^-1; q)
    n = 20
    lhs = jtheta(a, Q, "product", n)
    rhs = jtheta(a.inverse(), Q, "product", n + 10)
    rhs = -mul_spec(rhs, a)
    assert series_equal(lhs, rhs, n).passed


def test_euler_product_gives_partition_numbers():
    inv = series_inv(E(20))
    assert [inv.coeff(k) for k in range(21)] == PARTITIONS
    assert series_equal(E(80), pentagonal_E(80), 80).passed


def test_theta4_sum_and_product():
    assert series_equal(theta4(100), theta4_sum(100), 100).passed


def test_J_symmetry_and_eta():
    for b in (5, 7, 10):
        for a in range(1, b):
            assert J(b, a, 30) == J(b, b - a, 30)
    assert series_equal(J(1, trunc=30), E(30), 30).passed
    assert series_equal(jprod(30, (5, 1, 1), eta=((5, 1),)), J(5, 1, 30) * J(5, trunc=30), 30).passed


def test_finite_pochhammer_is_a_finite_product():
    z = LaurentPoly.z()
    f = pochhammer(Z, 3, Q, 10)
    # (z; q)_3 = (1 - z)(1 - zq)(1 - zq^2)
    assert f.coeff(0) == 1 - z
    assert f.coeff(1) == -(z - z**2)
    assert f.coeff(3) == z**2 - z**3
    assert all(f.coeff(k) == 0 for k in range(4, 11))


def test_zeta_triple_product_forms_agree():
    for p, k in ((5, 1), (5, 2), (7, 1), (7, 3)):
        assert series_equal(zq_product(p, k, 40), zq_product(p, k, 40, form="sum"), 40).passed


@pytest.mark.parametrize("name", DISSECTION_LEMMAS)
def test_dissection_lemmas(name):
    n = 40
    assert series_equal(dissection_lemma_lhs(name, n), dissection_lemma_rhs(name, n), n).passed


def test_random_specs_reproducible():
    # the same seed reproduces the same arguments, so reported failures can be replayed
    from qrank.verifier.checks import random_param

    a = [random_param(random.Random(3)) for _ in range(3)]
    b = [random_param(random.Random(3)) for _ in range(3)]
    assert a == b
