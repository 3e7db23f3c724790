from collections import Counter

import pytest

from charfields.arith import prime_powers_upto
from charfields.cyclotomic import root_sum
from charfields.galois import quad, rational_field, unique_subfield, cyclotomic_field
from charfields.glm import (
    class_count, class_types, exists_order, glm_order, glm_order_factored, k_ellr_glm, k_glm,
    lemma31_check, lemma31_details, omega, order_ellr_value_generators, partitions,
)
from charfields.limits import BoundExceeded, IndeterminateField, NoElementOfOrder
from charfields.tables import gl2_classes, gl2_table


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [len(list(partitions(n))) for n in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


def test_omega():
    assert omega(1, 3, 5) == root_sum(4, [3])
    assert omega(3, 0, 2) == 3
    assert omega(2, 1, 2) == -1


@pytest.mark.parametrize("m,q", [(1, 3), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (3, 4), (4, 3)])
def test_class_census(m, q):
    cls = class_types(m, q)
    assert len(cls) == class_count(m, q)
    assert sum(c.size for c in cls) == glm_order(m, q) == glm_order_factored(m, q)
    assert all(c.m == m for c in cls)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_m2_orders_match_gl2(q):
    assert Counter(c.element_order for c in class_types(2, q)) == Counter(c.order for c in gl2_classes(q))


def test_m2_types_match_table_one():
    cls = class_types(2, 5)
    types = Counter(c.type_key for c in cls)
    assert types[((1, (1, 1)),)] == 4      # a_x
    assert types[((1, (2,)),)] == 4        # b_x
    assert types[((1, (1,)), (1, (1,)))] == 6   # c_{x,y}
    assert types[((2, (1,)),)] == 10       # d_zeta


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        class_types(3, 11)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_k_glm_m2_equals_table(q):
    assert k_glm(2, q) == gl2_table(q).field_generated()


def test_exists_order():
    assert exists_order(2, 7, 3, 1)
    assert not exists_order(2, 2, 7, 1)
    assert exists_order(3, 2, 7, 1)
    assert exists_order(4, 3, 3, 2) and not exists_order(3, 3, 3, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("q", [2, 3, 4])
def test_exists_order_matches_enumeration(m, q):
    orders = {c.element_order for c in class_types(m, q)}
    for n in range(2, 40):
        from charfields.arith import factorize

        f = factorize(n)
        if len(f) == 1:
            assert exists_order(m, q, *f[0]) == (n in orders), n


def test_generators_q2_ell7():
    gens = order_ellr_value_generators(3, 2, 7, 1)
    assert set(gens) == {root_sum(7, [1, 2, 4]), root_sum(7, [3, 5, 6])}


def test_k_ellr_examples():
    assert k_ellr_glm(3, 2, 7, 1, check=True) == quad(-7)
    assert k_ellr_glm(2, 7, 3, 1) == cyclotomic_field(3)
    assert k_ellr_glm(2, 2, 3, 1) == rational_field()
    assert k_ellr_glm(3, 3, 13, 1, check=True) == unique_subfield(13, 1, 4)
    assert k_ellr_glm(2, 5, 5, 1) == rational_field()
    assert k_ellr_glm(2, 7, 2, 3) == quad(2)
    with pytest.raises(IndeterminateField):
        k_ellr_glm(3, 7, 2, 3)
    with pytest.raises(NoElementOfOrder):
        k_ellr_glm(2, 2, 7, 1)


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("q", prime_powers_upto(13))
def test_theorem2_three_ways(m, q):
    for ell, r in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (11, 1), (13, 1)]:
        if q % ell and exists_order(m, q, ell, r):
            k_ellr_glm(m, q, ell, r, check=True)


def test_unit_top_can_lose_the_field():
    # with unit top indices only, the level-9 periods vanish for q = 4
    assert order_ellr_value_generators(3, 4, 3, 2, unit_top=True) == []
    assert k_ellr_glm(3, 4, 3, 2) == cyclotomic_field(3)


def test_lemma31_examples():
    assert lemma31_check(2, 3, 2, (0, 1))
    assert lemma31_check(4, 5, 1, (1,))
    d = lemma31_details(7, 3, 2, (0, 1))
    assert d.value.is_zero() and d.field == rational_field() and not d.ok
    assert d.expected == quad(-3)
