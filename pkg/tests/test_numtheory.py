from math import gcd

import pytest
from hypothesis import given, strategies as st

from ellmoments.numtheory import (
    crt_combine,
    divisors,
    euler_phi,
    factorize,
    full_divisors,
    is_prime,
    liouville,
    phi_tilde,
    prec_list,
    prime_power,
    psi,
    radical,
    sigma,
    valuation,
)


def brute_phi(n):
    return sum(1 for a in range(n) if gcd(a, n) == 1)


@pytest.mark.parametrize("n, expected", [(1, 1), (12, 4), (7, 6)])
def test_euler_phi(n, expected):
    assert euler_phi(n) == expected == brute_phi(n)


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 6), (6, 12)])
def test_psi(n, expected):
    assert psi(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -2), (6, 12)])
def test_phi_tilde(n, expected):
    assert phi_tilde(n) == expected


def test_small_functions():
    assert sigma(6) == 12
    assert liouville(12) == 1
    assert liouville(30) == -1
    assert valuation(2, 40) == 3
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_against_sieve():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 2000):
        if sieve[i]:
            for j in range(i * i, 2000, i):
                sieve[j] = False
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if sieve[n]]
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(2) == (2, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)


@pytest.mark.parametrize("n, expected", [(12, [1, 3, 4, 12]), (1, [1]), (8, [1, 8])])
def test_full_divisors(n, expected):
    assert full_divisors(n) == expected


def test_prec_list_examples():
    assert prec_list(2, 8, 2) == [2]
    assert prec_list(2, 2, 2) == []
    # 2^a 3^b with 1 <= a <= v2(36) - 1 = 1 and 1 <= b <= v3(36) - 1 = 1 leaves only 6
    assert prec_list(6, 72, 2) == [6]
    with pytest.raises(ValueError):
        prec_list(2, 6, 4)


def brute_prec(m, n1, n2):
    ratio = n1 // n2
    out = []
    for mu in range(1, ratio + 1):
        if radical(mu) != radical(m):
            continue
        if all(1 <= valuation(l, mu) <= valuation(l, ratio) - 1 for l, _ in factorize(m)):
            out.append(mu)
    return out


@pytest.mark.parametrize("n1", range(1, 97))
def test_prec_list_brute(n1):
    for n2 in divisors(n1):
        for m in full_divisors(n1):
            if m >= 2:
                assert prec_list(m, n1, n2) == brute_prec(m, n1, n2)


def test_crt():
    assert crt_combine([(1, 2), (2, 3)]) == (5, 6)
    assert crt_combine([(0, 5)]) == (0, 5)
    assert crt_combine([(3, 4), (4, 9)]) == (31, 36)
    with pytest.raises(ValueError):
        crt_combine([(1, 4), (1, 6)])


def test_dirichlet_inverse_collapse():
    for n in range(1, 501):
        s = sum(euler_phi(d * d) * phi_tilde(n // d) for d in divisors(n))
        assert s == (1 if n == 1 else 0)


@given(st.integers(1, 100), st.integers(1, 100))
def test_multiplicative(a, b):
    if gcd(a, b) != 1:
        return
    for f in (euler_phi, psi, phi_tilde, sigma, liouville):
        assert f(a * b) == f(a) * f(b)


@given(st.integers(1, 3000))
def test_full_divisor_characterization(n):
    full = full_divisors(n)
    assert set(full) <= set(divisors(n))
    for nu in divisors(n):
        assert (nu in full) == (gcd(nu, n // nu) == 1)


@given(st.integers(2, 200), st.integers(1, 400))
def test_prec_radical(m, n1):
    for n2 in divisors(n1):
        for mu in prec_list(m, n1, n2):
            assert radical(mu) == radical(m)
