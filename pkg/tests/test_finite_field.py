import pytest
from hypothesis import given, settings, strategies as st

from charfields.arith import divisors, totient
from charfields.finite_field import (
    count_irreducible, elem_order, embedding, frobenius_orbits, irreducibles, is_irreducible,
    make_field, norm, quadratic_character, trace,
)


def test_deterministic_choices():
    F9 = make_field(3, 2)
    assert F9.modulus == (1, 0, 1)
    assert F9.generator.c == (1, 1)
    assert elem_order(F9.generator) == 8
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(7, 1).generator.c == (3,)


def test_quadratic_character_f7():
    F7 = make_field(7, 1)
    assert quadratic_character(F7([6])) == -1
    assert quadratic_character(F7.generator) == -1
    assert quadratic_character(F7([2])) == 1


def test_irreducible_counts():
    F3 = make_field(3, 1)
    assert len(irreducibles(1, F3, exclude_t=True)) == 2
    assert len(irreducibles(2, F3)) == 3
    assert len(irreducibles(3, make_field(2, 1))) == 2
    for q, (p, n) in [(2, (2, 1)), (3, (3, 1)), (4, (2, 2)), (5, (5, 1))]:
        F = make_field(p, n)
        for d in range(1, 5):
            polys = irreducibles(d, F)
            assert len(polys) == len(set(polys)) == count_irreducible(d, q)
            if n == 1:
                assert all(is_irreducible([c.to_int() for c in f], p) for f in polys)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2), (3, 4), (2, 6)])
def test_cyclic_and_frobenius(p, n):
    F = make_field(p, n)
    q = p**n
    orders = {}
    for a in F.elements():
        if not a.is_zero():
            orders[a.order()] = orders.get(a.order(), 0) + 1
    assert orders == {d: totient(d) for d in divisors(q - 1)}
    fixed = [a for a in F.elements() if a.frobenius() == a]
    assert len(fixed) == p


def test_trace_norm_land_in_subfield():
    F = make_field(3, 2)
    for a in F.elements():
        assert trace(a).in_subfield(1)
        assert norm(a).in_subfield(1)


def test_embedding_is_a_homomorphism():
    small, big = make_field(2, 2), make_field(2, 4)
    emb = embedding(small, big)
    for a in small.elements():
        for b in small.elements():
            ea, eb = big(emb[a.c]), big(emb[b.c])
            assert big(emb[(a * b).c]) == ea * eb
            assert big(emb[(a + b).c]) == ea + eb


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (5, 1), (2, 3)]), st.integers(0, 500), st.integers(0, 500))
def test_log_exp(pn, i, j):
    F = make_field(*pn)
    a, b = F.exp(i), F.exp(j)
    assert F.log(a * b) == (i + j) % (F.q - 1)


def test_orbits_match_counts():
    for q in (2, 3, 4):
        for d in (1, 2, 3):
            orbs = frobenius_orbits(d, q)
            assert len(orbs) == count_irreducible(d, q) - (1 if d == 1 else 0)
