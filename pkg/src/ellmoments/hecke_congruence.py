"""Congruence counts behind the elliptic term of the trace formula.

``CongParams.n1`` is the full level at which ``d`` is known (it may carry
the p-part p^r). Values d~q + d~^{-1} mod n are taken from one lift d~ of
d built by CRT; the tests scan every lift to confirm the choice is
immaterial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .numtheory import (
    crt_combine,
    factorize,
    inverse_mod,
    psi,
    units,
    valuation,
)
from .quadforms import h_w


@dataclass(frozen=True)
class CongParams:
    n1: int
    n2: int
    q: int
    d: int = 1

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1 or self.n1 % self.n2:
            raise ValueError(f"need n2 | n1, got n1={self.n1}, n2={self.n2}")
        if gcd(self.d, self.n1) != 1:
            raise ValueError(f"d={self.d} is not a unit mod {self.n1}")

    def with_d(self, d: int) -> CongParams:
        return CongParams(self.n1, self.n2, self.q, d % self.n1 if self.n1 > 1 else 0)


def _lift(params: CongParams, n: int) -> int:
    """A unit d~ modulo lcm(n1, n) with d~ == d (mod n1) and 1 at primes new to n."""
    fresh = 1
    for l, e in factorize(n):
        if params.n1 % l:
            fresh *= l**e
    d, _ = crt_combine([(params.d % params.n1, params.n1), (1, fresh)])
    return d


def lift_value(params: CongParams, n: int) -> int:
    """d~ q + d~^{-1} (mod n); n must divide n1^2 (covers every n1 n2 mu used)."""
    if (params.n1 * params.n1) % n:
        raise ValueError(f"modulus {n} does not divide n1^2 = {params.n1 ** 2}")
    if n == 1:
        return 0
    dl = _lift(params, n)
    return (dl * params.q + inverse_mod(dl, n)) % n


def all_lift_values(params: CongParams, n: int, modulus: int) -> set[int]:
    """d~ q + d~^{-1} (mod n) over every unit lift d~ of d to Z/modulus."""
    if modulus % params.n1 or modulus % n:
        raise ValueError("modulus must be a multiple of n1 and n")
    vals = set()
    for dl in range(params.d % params.n1, modulus, params.n1):
        if gcd(dl, modulus) == 1 or modulus == 1:
            vals.add((dl * params.q + inverse_mod(dl, n)) % n if n > 1 else 0)
    return vals


def D(params: CongParams, t: int, n: int) -> int:
    """1 if d~ q + d~^{-1} == t (mod n), else 0."""
    if n == 1:
        return 1
    return int(lift_value(params, n) == t % n)


def D_nu_mu(params: CongParams, nu: int, mu: int, t: int) -> int:
    n12 = params.n1 * params.n2
    out = 1
    for l, _ in factorize(nu):
        if mu % l == 0:
            e = valuation(l, n12 * mu)
            out *= D(params, t, l ** (e - 1)) - D(params, t, l**e)
        else:
            out *= D(params, t, l ** valuation(l, n12))
        if not out:
            return 0
    return out


@lru_cache(maxsize=None)
def _s_set(N: int, g: int, t: int, q: int) -> tuple[int, ...]:
    mod = N * g
    found = set()
    for c in units(mod):
        if (c * c - t * c + q) % mod == 0:
            found.add(c % N)
    return tuple(sorted(found))


def S_set(N: int, m: int, t: int, q: int) -> list[int]:
    """Units c mod N with a unit lift c~ mod N*(N, m) solving c~^2 - t c~ + q == 0."""
    g = gcd(N, m)
    mod = N * g
    return list(_s_set(N, g, t % mod, q % mod))


def W(N: int, M: int, m: int, d: int, t: int, q: int) -> int:
    dinv = inverse_mod(d, N) if N > 1 else 0
    return sum(1 for c in S_set(M * N, m, t, q) if (c - dinv) % N == 0)


def square_divisors(Delta: int) -> list[int]:
    """All m >= 1 with m^2 | Delta."""
    return [m for m in range(1, isqrt(abs(Delta)) + 1) if Delta % (m * m) == 0]


def C_NM(N: int, M: int, t: int, q: int, d: int) -> Fraction:
    Delta = t * t - 4 * q
    if Delta >= 0:
        raise ValueError("need t^2 < 4q")
    MN = M * N
    total = Fraction(0)
    for m in square_divisors(Delta):
        hw = h_w(Delta // (m * m))
        if hw:
            w = W(N, M, m, d, t, q)
            if w:
                total += hw * Fraction(psi(MN), psi(MN // gcd(MN, m))) * w
    return total
