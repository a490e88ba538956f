"""Class-number sums H_{n1,n2}(t, q, d) counting curves with a given subgroup."""

from __future__ import annotations

from fractions import Fraction

from .hecke_congruence import CongParams, D, D_nu_mu
from .numtheory import full_divisors, liouville, prec_list
from .quadforms import hurwitz_H

HALF = Fraction(1, 2)


def _delta(a: int, b: int, c: int) -> bool:
    return (a - b) % c == 0


def H_sum(params: CongParams, t: int) -> Fraction:
    """H_{n1,n2}(t, q, d).

    Leading term 1/2 H((t^2-4q)/n2^2) [d^2 q == 1 mod n2] D(t; n1 n2), then for
    each full divisor m >= 2 of n1 and each mu < m (relative to n1, n2) a
    correction lambda(m)/2 H((t^2-4q)/(n2 mu)^2) [d^2 q == 1 mod n2 mu] D_{n1,mu}(t).
    Hurwitz values at non-integral arguments are zero.
    """
    n1, n2, q, d = params.n1, params.n2, params.q, params.d
    Delta = t * t - 4 * q
    if Delta >= 0:
        raise ValueError(f"need t^2 < 4q, got t={t}, q={q}")
    dq = d * d * q
    total = Fraction(0)
    if _delta(dq, 1, n2) and D(params, t, n1 * n2):
        total += HALF * hurwitz_H(Fraction(Delta, n2 * n2))
    for m in full_divisors(n1):
        if m < 2:
            continue
        sign = liouville(m)
        for mu in prec_list(m, n1, n2):
            # the congruence must hold before d can be lifted modulo n1 n2 mu
            if not _delta(dq, 1, n2 * mu):
                continue
            H = hurwitz_H(Fraction(Delta, (n2 * mu) ** 2))
            if H:
                total += sign * HALF * H * D_nu_mu(params, n1, mu, t)
    return total


def H_sum_p_level(p: int, r: int, n1: int, n2: int, q: int, d: int, t: int) -> Fraction:
    """H_{p^r n1, n2}(t, q, d) evaluated directly at the level p^r n1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if n1 % p == 0:
        raise ValueError("n1 must be prime to p")
    return H_sum(CongParams(p**r * n1, n2, q, d), t)
