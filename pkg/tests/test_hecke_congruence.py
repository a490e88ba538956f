from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ellmoments.hecke_congruence import (
    C_NM,
    CongParams,
    D,
    D_nu_mu,
    S_set,
    W,
    all_lift_values,
    lift_value,
    square_divisors,
)
from ellmoments.numtheory import divisors, units
from ellmoments.verify import c_factorization_checks, lift_checks, w_lemma_checks


def test_lift_value_examples():
    # n1 is the full level, so the p-part 2 is already part of it
    assert lift_value(CongParams(2, 1, 2, 1), 2) == 1
    params = CongParams(4, 2, 9, 1)
    assert all_lift_values(params, 8, 8) == {2}
    assert lift_value(params, 8) == 2


def test_lift_value_rejects():
    with pytest.raises(ValueError):
        lift_value(CongParams(4, 2, 9, 1), 32)
    with pytest.raises(ValueError):
        lift_value(CongParams(1, 1, 2, 0), 5)
    with pytest.raises(ValueError):
        CongParams(4, 2, 9, 2)
    with pytest.raises(ValueError):
        CongParams(4, 3, 9, 1)


def test_d_equal_one_is_divisibility():
    for q in (2, 3, 4, 5, 7, 9):
        for n1 in range(1, 13):
            params = CongParams(n1, 1, q, 1)
            for n in divisors(n1):
                for t in range(-6, 7):
                    assert D(params, t, n) == int((q + 1 - t) % n == 0)


def test_D_examples():
    assert D(CongParams(2, 1, 2, 1), 1, 2) == 1
    assert D(CongParams(6, 2, 5, 1), 3, 1) == 1


def test_D_nu_mu_examples():
    assert D_nu_mu(CongParams(4, 2, 5, 1), 1, 2, 3) == 1
    assert D_nu_mu(CongParams(2, 1, 5, 1), 2, 1, 2) == 1


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13]), st.integers(1, 36), st.data())
def test_monotone_in_modulus(q, n1, data):
    d = data.draw(st.sampled_from(units(n1)))
    params = CongParams(n1, 1, q, d)
    t = data.draw(st.integers(-7, 7))
    for n in divisors(n1 * n1):
        if D(params, t, n):
            assert all(D(params, t, m) for m in divisors(n))


def test_S_set_examples():
    assert S_set(1, 5, 1, 2) == [0]
    for q, p in [(2, 2), (4, 2), (3, 3), (9, 3)]:
        assert S_set(p * p, 1, p, q) == []
    assert S_set(4, 1, 1, 4) == [1]


def test_W_trivial_level():
    for t in (-1, 0, 1):
        for m in square_divisors(t * t - 8):
            assert W(1, 1, m, 0, t, 2) == 1


def test_C_example():
    assert C_NM(1, 1, 1, 2, 0) == 1
    assert C_NM(1, 1, 0, 1, 0) == Fraction(1, 2)
    with pytest.raises(ValueError):
        C_NM(1, 1, 3, 2, 0)


def test_lift_independence_small_grid():
    assert all(c.passed for c in lift_checks(n12_max=24, q_max=16))


def test_w_lemma():
    assert all(c.passed for c in w_lemma_checks())


def test_c_factorization_small_grid():
    assert all(c.passed for c in c_factorization_checks(N_max=6, rs=(1,)))
