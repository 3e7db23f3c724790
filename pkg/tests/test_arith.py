from hypothesis import given, strategies as st

from charfields.arith import (
    divisors, factorize, is_prime, lcm, mobius, mult_order, prime_power, star, totient, units,
)


def test_small_values():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert totient(27) == 18
    assert mobius(30) == -1 and mobius(12) == 0
    assert units(1) == [0]
    assert mult_order(2, 7) == 3
    assert mult_order(7, 9) == 3
    assert star(3) == -3 and star(5) == 5
    assert lcm(4, 6, 10) == 60


@given(st.integers(min_value=1, max_value=5000))
def test_factorize_roundtrip(n):
    acc = 1
    for p, e in factorize(n):
        assert is_prime(p)
        acc *= p**e
    assert acc == n


@given(st.integers(min_value=1, max_value=2000))
def test_totient_counts_units(n):
    assert totient(n) == len(units(n)) or n == 1


@given(st.integers(min_value=2, max_value=500))
def test_mobius_sum(n):
    assert sum(mobius(d) for d in divisors(n)) == 0
