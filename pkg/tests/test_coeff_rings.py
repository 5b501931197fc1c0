import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrank.coeff_rings import CycloNum, LaurentPoly, cyclo, join, laurent, ring_of, ZZ, QQ
from qrank.errors import NotInvertibleError, RingMismatchError

from strategies import cyclonums, laurent_polys, primes, rationals


def to_complex(x: CycloNum) -> complex:
    w = cmath.exp(2j * cmath.pi / x.p)
    return sum(complex(float(c)) * w**i for i, c in enumerate(x.c))


def test_root_of_unity_relations():
    for p in (3, 5, 7, 11):
        w = CycloNum.zeta(p)
        assert w**p == 1
        assert sum((w**k for k in range(p)), CycloNum(p)) == 0
        assert CycloNum.zeta(p, p + 2) == w**2
        assert w.inverse() == w ** (p - 1)


def test_reduction_is_canonical():
    # zeta^4 = -(1 + zeta + zeta^2 + zeta^3) in Q(zeta_5)
    assert CycloNum(5, [0, 0, 0, 0, 1]) == CycloNum(5, [-1, -1, -1, -1])
    assert CycloNum(5, [1, 0, 0, 0, 0, 1]) == CycloNum.from_scalar(5, 2)


def test_rejects_composite_order():
    with pytest.raises(ValueError):
        CycloNum(9, [1])


@given(primes.flatmap(lambda p: st.tuples(cyclonums(p), cyclonums(p), cyclonums(p))))
def test_field_axioms(t):
    a, b, c = t
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b - b == a


@given(primes.flatmap(lambda p: cyclonums(p, coeffs=rationals)))
def test_inverse(a):
    if not a:
        with pytest.raises(NotInvertibleError):
            a.inverse()
        return
    assert a * a.inverse() == 1


@given(primes.flatmap(lambda p: st.tuples(cyclonums(p), cyclonums(p))))
def test_matches_complex_embedding(t):
    a, b = t
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6
    assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9


@given(primes.flatmap(lambda p: st.tuples(cyclonums(p), cyclonums(p), st.integers(1, p - 1))))
def test_galois_is_a_ring_automorphism(t):
    a, b, k = t
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@given(primes.flatmap(cyclonums))
def test_norm_is_product_of_conjugates(a):
    prod = CycloNum.from_scalar(a.p, 1)
    for k in range(1, a.p):
        prod = prod * a.galois(k)
    assert prod.is_scalar()
    assert prod == CycloNum.from_scalar(a.p, a.norm())
    assert a.conj() == a.galois(a.p - 1)


def test_mixed_fields_refuse():
    with pytest.raises(RingMismatchError):
        CycloNum.zeta(5) + CycloNum.zeta(7)
    with pytest.raises(RingMismatchError):
        join(cyclo(5), cyclo(7))


def test_monomial_detection():
    assert CycloNum.zeta(7, 3).monomial() == (1, 3)
    assert (3 * CycloNum.zeta(5)).monomial() == (3, 1)
    assert (1 + CycloNum.zeta(5)).monomial() is None


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_laurent_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


@given(laurent_polys(), laurent_polys(), st.integers(1, 4))
def test_specialization_is_a_homomorphism(f, g, k):
    assert (f * g).specialize(5, k) == f.specialize(5, k) * g.specialize(5, k)
    assert (f + g).specialize(7, k) == f.specialize(7, k) + g.specialize(7, k)


@given(laurent_polys(), st.sampled_from([Fraction(1, 2), Fraction(-3, 2), 2, -1]))
def test_evaluate_stays_exact(f, v):
    out = f.evaluate(v)
    assert isinstance(out, (int, Fraction))
    expect = sum((Fraction(c) * Fraction(v) ** e for e, c in f.c.items()), Fraction(0))
    assert out == expect


def test_evaluate_negative_power_at_zero():
    with pytest.raises(NotInvertibleError):
        LaurentPoly.z(-1).evaluate(0)


def test_laurent_display_and_extent():
    z = LaurentPoly.z()
    f = (1 + z) * (z**-1 - 2)
    assert str(f) == "z^-1 - 1 - 2*z"
    assert (f.min_exp(), f.max_exp()) == (-1, 1)
    assert f.evaluate(1) == -2


def test_ring_lattice():
    assert join(ZZ, QQ) == QQ
    assert join(cyclo(5), laurent()) == laurent(cyclo(5))
    assert ring_of(Fraction(1, 2)) == QQ
    assert ring_of(CycloNum.zeta(7)) == cyclo(7)
    assert ring_of(LaurentPoly.z()) == laurent()
