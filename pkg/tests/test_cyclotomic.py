from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from charfields.cyclotomic import (
    Cyclotomic, add, change_level, cyclo_root, cyclotomic_polynomial, galois_apply, mul, neg,
    root_sum, sub,
)
from charfields.galois import gauss_sum


def test_basic_identities():
    assert cyclo_root(4) ** 2 == -1
    assert cyclo_root(3) + cyclo_root(3, 2) == -1
    assert cyclo_root(8) * cyclo_root(8, 7) == 1
    assert gauss_sum(5) ** 2 == 5
    assert gauss_sum(7) ** 2 == -7


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_polynomial(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


def test_levels_and_hash():
    z3 = cyclo_root(3)
    up = z3.raise_to(12)
    assert up.level == 12
    assert up == z3 and hash(up) == hash(z3)
    assert up.lowered().level == 3
    assert change_level(up, 3).level == 3
    with pytest.raises(ValueError):
        change_level(cyclo_root(12), 3)


def test_rationals_and_galois():
    assert Cyclotomic.rational(Fraction(1, 2)).is_rational()
    assert hash(Cyclotomic.rational(2)) == hash(2)
    z5 = cyclo_root(5)
    assert galois_apply(2, z5) == cyclo_root(5, 2)
    assert (z5 + z5.conjugate()).is_rational() is False
    assert (z5 + z5.conjugate()) == root_sum(5, [1, 4])
    with pytest.raises(ValueError):
        z5.galois(5)


def test_functional_api():
    a, b = cyclo_root(6), cyclo_root(6, 5)
    assert add(a, b) == 1
    assert sub(a, a).is_zero()
    assert mul(a, b) == 1
    assert neg(a) + a == 0


levels = st.sampled_from([3, 4, 5, 7, 8, 9, 12, 15])


@st.composite
def elements(draw, n=None):
    n = n or draw(levels)
    terms = draw(st.dictionaries(st.integers(0, n - 1), st.fractions(min_value=-9, max_value=9, max_denominator=4),
                                 max_size=4))
    return Cyclotomic.from_exponents(n, terms)


@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(levels.flatmap(lambda n: st.tuples(st.just(n), elements(n), elements(n))))
def test_galois_is_homomorphism(t):
    n, a, b = t
    from charfields.arith import units

    for s in units(n):
        assert galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b)
        assert galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b)


@settings(max_examples=40, deadline=None)
@given(elements())
def test_complex_embedding_consistent(a):
    assert abs((a * a.conjugate()).to_complex().imag) < 1e-9
    assert abs((a + a).to_complex() - 2 * a.to_complex()) < 1e-9
