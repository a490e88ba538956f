from fractions import Fraction
from math import gcd

import pytest

from ellmoments.chebyshev import cheb_u_norm
from ellmoments.curves import AbelianSpec
from ellmoments.numtheory import divisors, euler_phi, units
from ellmoments.oracles import QSeries, series_mul, series_pow
from ellmoments.quadforms import hurwitz_H
from ellmoments.traceformula import (
    T_N_lambda,
    T_N_lambda_scaled,
    T_dual,
    T_ell,
    T_hyp,
    T_id,
    T_trace,
    TraceParams,
    dirichlet_collapse_check,
    main_theorem_rhs,
)
from ellmoments.verify import collapse_checks, integrality_checks, two_route_checks


def P(N=1, M=1, q=2, d=1, k=12, r=0):
    return TraceParams(N, M, q, d, k, r)


def test_params_validation():
    with pytest.raises(ValueError):
        P(N=4, M=3)
    with pytest.raises(ValueError):
        P(N=4, q=2)
    with pytest.raises(ValueError):
        P(N=5, d=5)
    with pytest.raises(ValueError):
        P(N=3, M=3, q=2, d=1)
    with pytest.raises(ValueError):
        P(k=1)


def test_identity_term():
    assert T_id(P(q=2)) == 0
    assert T_id(P(q=4)) == Fraction(11 * 4**5, 12)
    # odd weight at level > 2: only one delta fires; 2 * 2 == -1 (mod 5) picks the signed one
    assert T_id(P(N=5, q=4, d=2, k=3)) == -euler_phi(5) * Fraction(2, 24) * 2 * 6
    assert T_id(P(N=5, q=4, d=1, k=3)) == 0


def test_elliptic_level_one():
    expected = Fraction(1, 2) * sum(
        cheb_u_norm(t, 2, 10) * hurwitz_H(t * t - 8) for t in range(-2, 3))
    assert T_ell(P(q=2)) == expected


def test_hyperbolic_and_dual():
    for q in (2, 3, 5, 7):
        assert T_hyp(P(q=q)) == 1
    assert T_dual(P(q=4, k=2)) == 7
    assert T_dual(P(q=2, k=2)) == 3
    assert T_dual(P(q=2, k=12)) == 0


def test_level_one_traces():
    assert T_trace(P(q=2)) == -24
    assert T_trace(P(q=4)) == -1472
    for k in (2, 4, 6, 8, 10, 14):
        assert T_trace(P(q=2, k=k)) == 0


def test_odd_weight_small_level_vanishes():
    for N in (1, 2):
        for q in (3, 5, 7, 9):
            if N == 2 and q % 2 == 0:
                continue
            for k in (3, 5, 7, 9):
                assert T_trace(P(N=N, q=q, k=k)) == 0


def _eta_product(level, power, prec):
    """eta(z)^power eta(level z)^power, for pairs where the q-shift is exactly 1."""
    assert power * (level + 1) == 24
    f = QSeries.from_list([1], prec)
    for n in range(1, prec + 1):
        for step in (n, level * n):
            if step <= prec:
                c = [0] * (prec + 1)
                c[0], c[step] = 1, -1
                f = series_mul(f, series_pow(QSeries(tuple(c), prec), power))
    return QSeries(tuple([0] + list(f.coefficients[:prec])), prec)


def _gamma0_trace(N, q, k, r=0):
    level = TraceParams(N, 1, q, 1, k, r).level
    total = sum((T_trace(TraceParams(N, 1, q, d, k, r)) for d in units(level)), Fraction(0))
    return total / euler_phi(level)


@pytest.mark.parametrize("level, power, k", [(11, 2, 2), (5, 4, 4), (3, 6, 6), (2, 8, 8)])
def test_gamma0_against_eta_products(level, power, k):
    # each space S_k(Gamma_0(level)) is spanned by one eta product
    f = _eta_product(level, power, 13)
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13):
        if q % level and q <= 13:
            assert _gamma0_trace(level, q, k) == f[q]


@pytest.mark.parametrize("level, power, k", [(5, 4, 4), (3, 6, 6), (2, 8, 8)])
def test_p_level_gives_U_p(level, power, k):
    # with N = 1 and r = 1 the level is p itself and T_q acts as U_q
    f = _eta_product(level, power, level**2)
    for q in (level, level**2):
        assert _gamma0_trace(1, q, k, r=1) == f[q]


def test_p_level_weight_two_dual_term():
    # Gamma_0(11): U_11 has eigenvalue 1; the stated sigma(q) dual term overshoots by sigma(q) - q
    assert _gamma0_trace(1, 11, 2, r=1) == 1 + (12 - 11)


def test_T_N_lambda_examples():
    assert T_N_lambda(2, 1, 2, 1, 12) == 23
    assert T_N_lambda(6, 6, 7, 1, 4) == T_N_lambda_scaled(6, 6, 7, 1, 4)
    with pytest.raises(ValueError):
        T_N_lambda(6, 3, 5, 1, 4)


def test_T_N_lambda_scaled_grid():
    for level, q in [(2, 2), (4, 2), (3, 3), (6, 3), (10, 5), (12, 2), (18, 3), (8, 3), (15, 4)]:
        for d in units(level):
            L = gcd(d * d * q - 1, level)
            for lam in divisors(L):
                for k in (2, 3, 4, 8):
                    assert T_N_lambda(level, lam, q, d, k) == T_N_lambda_scaled(level, lam, q, d, k)


def test_main_theorem_examples():
    assert main_theorem_rhs(AbelianSpec(2), 2, 12) == Fraction(23, 2)
    assert main_theorem_rhs(AbelianSpec(15, 3), 5, 4) == 0
    with pytest.raises(ValueError):
        main_theorem_rhs(AbelianSpec(3), 2, 4)
    with pytest.raises(ValueError):
        main_theorem_rhs(AbelianSpec(2, 2), 2, 4)


def test_collapse_examples():
    assert dirichlet_collapse_check(6, 3, 4, 1, 4)
    assert dirichlet_collapse_check(12, 2, 3, 1, 6)
    assert all(c.passed for c in collapse_checks(qs=(2, 3), n1_max=4, rs=(1,), ks=(2, 4)))


def test_integrality_and_two_routes_small():
    assert all(c.passed for c in integrality_checks(N_max=6, ks=(2, 3, 12)))
    assert all(c.passed for c in two_route_checks(N_max=6, ks=(2, 3, 12)))
