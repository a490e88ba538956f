"""Multiplicative functions, divisors and small modular helpers.

Everything here works on plain Python integers. Inputs are desk scale, so
factorization is trial division; primality uses a deterministic
Miller-Rabin good for every n < 2**64.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt, prod

Factorization = tuple[tuple[int, int], ...]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Return ((prime, exponent), ...) ascending by prime."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    n = abs(n)
    out = []
    if n > 1 and is_prime(n):
        return ((n, 1),)
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
            if n > 1 and is_prime(n):
                break
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power q as (p, n) with q == p**n."""
    f = factorize(q) if q > 1 else ()
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f[0]


def valuation(l: int, n: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    v = 0
    while n % l == 0:
        n //= l
        v += 1
    return v


def radical(n: int) -> int:
    return prod(prime_factors(n))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def psi(n: int) -> int:
    return prod(p ** (e - 1) * (p + 1) for p, e in factorize(n))


def phi_tilde(n: int) -> int:
    """Dirichlet inverse of n -> euler_phi(n**2): n * prod over l | n of -(l - 1)."""
    return n * prod(1 - p for p, _ in factorize(n))


def sigma(n: int) -> int:
    return sum(divisors(n))


def omega(n: int) -> int:
    return len(factorize(n))


def liouville(n: int) -> int:
    # (-1)**omega(n), the convention used throughout the class-number sums
    return -1 if omega(n) % 2 else 1


def full_divisors(n: int) -> list[int]:
    """Divisors nu of n whose every prime appears with its full exponent in n."""
    parts = [p**e for p, e in factorize(n)]
    out = [1]
    for pe in parts:
        out += [d * pe for d in out]
    return sorted(out)


def prec_list(m: int, n1: int, n2: int) -> list[int]:
    """All mu with the same prime support as m and 1 <= v_l(mu) <= v_l(n1/n2) - 1."""
    if n1 % n2:
        raise ValueError(f"n2={n2} does not divide n1={n1}")
    ratio = n1 // n2
    out = [1]
    for l in prime_factors(m):
        top = valuation(l, ratio) - 1
        if top < 1:
            return []
        out = [mu * l**a for mu in out for a in range(1, top + 1)]
    return sorted(out) if m > 1 else []


def crt_combine(residues: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine (value, modulus) pairs with pairwise coprime moduli."""
    x, mod = 0, 1
    for a, m in residues:
        if gcd(mod, m) != 1:
            raise ValueError(f"moduli {mod} and {m} are not coprime")
        # x + mod * k == a (mod m)
        k = (a - x) * pow(mod, -1, m) % m if m > 1 else 0
        x += mod * k
        mod *= m
        x %= mod
    return x, mod


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def units(n: int) -> list[int]:
    """Residues coprime to n; for n == 1 this is [0]."""
    if n == 1:
        return [0]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def inverse_mod(a: int, n: int) -> int:
    if n == 1:
        return 0
    return pow(a, -1, n)
