import pytest
from hypothesis import given
from hypothesis import strategies as st

from liedim.arith import (
    ExactnessError,
    PAdicSplit,
    checked_sub,
    divisors,
    exact_div,
    factorial,
    is_prime,
    mobius,
    p_adic_split,
)


def test_exact_div():
    assert exact_div(12, 3) == 4
    assert exact_div(0, 5) == 0
    assert exact_div(-12, 3) == -4
    with pytest.raises(ExactnessError):
        exact_div(13, 3)


def test_checked_sub():
    assert checked_sub(5, 3) == 2
    assert checked_sub(3, 3) == 0
    with pytest.raises(ExactnessError):
        checked_sub(3, 5)


def test_is_prime_small():
    primes = [n for n in range(50) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert not is_prime(1)
    assert not is_prime(-7)
    assert not is_prime(121)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]
    assert divisors(97) == [1, 97]
    with pytest.raises(ValueError):
        divisors(0)


def test_mobius_values():
    expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 8: 0, 9: 0, 12: 0, 30: -1, 105: -1, 210: 1}
    for d, mu in expected.items():
        assert mobius(d) == mu
    with pytest.raises(ValueError):
        mobius(0)


@given(st.integers(min_value=1, max_value=5000))
def test_mobius_divisor_sum(r):
    # sum of mu over divisors is the indicator of r == 1
    total = sum(mobius(d) for d in divisors(r))
    assert total == (1 if r == 1 else 0)


@given(st.integers(min_value=1, max_value=10**6), st.sampled_from([2, 3, 5, 7, 11]))
def test_p_adic_split_round_trip(r, p):
    s = p_adic_split(r, p)
    assert s.p**s.m * s.k == r == s.r
    assert s.k % p != 0
    assert s.m >= 0


def test_p_adic_split_examples():
    assert p_adic_split(12, 2) == PAdicSplit(2, 2, 3)
    assert p_adic_split(12, 3) == PAdicSplit(3, 1, 4)
    assert p_adic_split(7, 5) == PAdicSplit(5, 0, 7)
    assert p_adic_split(8, 2) == PAdicSplit(2, 3, 1)
    with pytest.raises(ValueError):
        p_adic_split(0, 2)
    with pytest.raises(ValueError):
        p_adic_split(6, 4)


def test_factorial():
    assert factorial(0) == 1
    assert factorial(6) == 720
    with pytest.raises(ValueError):
        factorial(-1)
