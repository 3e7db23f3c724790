import pytest
from hypothesis import given, settings, strategies as st

from charfields.arith import units
from charfields.cyclotomic import cyclo_root, root_sum
from charfields.galois import (
    FieldDescriptor, ResidueGroup, compositum, cyclotomic_field, field_of, field_reduce, fixed_field,
    named_field, quad, real_cyclotomic, sqrt_element, sqrt_qstar, sqrt_qstar_element, stabilizer,
    unique_subfield,
)


def test_stabilizers():
    assert stabilizer([cyclo_root(5)], 5).elements == (1,)
    assert stabilizer([root_sum(5, [1, 4])], 5).elements == (1, 4)
    assert len(stabilizer([root_sum(7, [1, 2, 4])], 7)) == 3


def test_vanishing_period_generates_q():
    # zeta_9 + zeta_9^4 + zeta_9^7 = zeta_9 (1 + zeta_3 + zeta_3^2) = 0
    v = root_sum(9, [1, 7, 4])
    assert v.is_zero()
    assert field_of([v]) == named_field("Q")


def test_named_fields():
    assert quad(2).conductor == 8 and quad(2).fixing_residues == (1, 7)
    assert quad(-2).fixing_residues == (1, 3)
    assert unique_subfield(7, 1, 2) == quad(-7)
    assert real_cyclotomic(5) == quad(5)
    assert real_cyclotomic(4) == named_field("Q")
    assert named_field("Q(i)") == cyclotomic_field(4)
    assert named_field("Q(zeta_8)").degree == 4
    assert named_field("real(12)") == quad(3)
    assert named_field("sqrt_qstar(3,1)") == quad(-3)
    assert sqrt_qstar(3, 2) == named_field("Q")
    assert "Q(sqrt(5))" in quad(5).names()


@pytest.mark.parametrize("m", [-30, -15, -7, -3, -2, -1, 2, 3, 5, 6, 10, 13, 21, 30])
def test_sqrt_elements(m):
    s = sqrt_element(m)
    assert s * s == m
    assert field_of([s]) == quad(m)


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (11, 1)])
def test_gauss_sum_over_fq(p, n):
    q = p**n
    g = sqrt_qstar_element(p, n)
    assert g * g == (q if q % 4 == 1 else -q)


def test_compositum_and_order():
    f = compositum(quad(-1), quad(2))
    assert f == cyclotomic_field(8)
    assert quad(2) <= f and not (f <= quad(2))


def test_descriptor_roundtrip():
    f = fixed_field(21, [4])
    assert FieldDescriptor.from_dict(f.to_dict()) == f


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([8, 12, 15, 16, 20, 21, 24, 28]), st.data())
def test_field_reduce_idempotent(n, data):
    gens = data.draw(st.lists(st.sampled_from(units(n)), max_size=2))
    fd = fixed_field(n, gens)
    assert field_reduce(fd) == fd
    assert field_reduce(2 * n, fd.lifted(2 * n)) == fd
    H = ResidueGroup.generated_by(n, gens)
    assert H.is_subgroup()
    assert fd.degree * len(fd.fixing_subgroup) == len(units(fd.conductor)) or fd.conductor == 1
