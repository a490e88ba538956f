"""Trace of T_q <d> on S_k(Gamma(p^r N, M)) and the moment identity built on it.

The level is ``p^r * N`` with p the characteristic of q and gcd(N, q) = 1;
r = 0 gives the plain Gamma(N, M) formula. Every term is an exact Fraction;
only the signed total is expected to be an integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .chebyshev import cheb_u_norm
from .classsum import H_sum
from .hecke_congruence import C_NM, CongParams
from .curves import AbelianSpec
from .numtheory import divisors, euler_phi, phi_tilde, prime_power, psi, sigma


@dataclass(frozen=True)
class TraceParams:
    N: int
    M: int
    q: int
    d: int = 1
    k: int = 2
    r: int = 0

    def __post_init__(self):
        p, _ = prime_power(self.q)
        if self.N < 1 or self.M < 1 or self.N % self.M:
            raise ValueError(f"need M | N, got N={self.N}, M={self.M}")
        if self.N % p == 0:
            raise ValueError(f"N={self.N} must be prime to q={self.q}")
        if self.k < 2:
            raise ValueError("weight k must be >= 2")
        if self.r < 0:
            raise ValueError("r must be >= 0")
        if gcd(self.d, self.level) != 1:
            raise ValueError(f"d={self.d} is not a unit mod {self.level}")
        if (self.d * self.d * self.q - 1) % self.M:
            raise ValueError(f"need d^2 q == 1 mod M, got d={self.d}, q={self.q}, M={self.M}")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def level(self) -> int:
        return self.p**self.r * self.N

    @property
    def L(self) -> int:
        return gcd(self.d * self.d * self.q - 1, self.level)


def traces(q: int) -> range:
    """All t with t^2 < 4q."""
    b = isqrt(4 * q - 1)
    return range(-b, b + 1)


@lru_cache(maxsize=None)
def sum_U_H(level: int, n2: int, q: int, d: int, k: int) -> Fraction:
    """Sum over t^2 < 4q of U_{k-2}(t, q) H_{level, n2}(t, q, d)."""
    params = CongParams(level, n2, q, d % level if level > 1 else 0)
    return sum((cheb_u_norm(t, q, k - 2) * H_sum(params, t) for t in traces(q)), Fraction(0))


def _pm_delta(x: int, mod: int, k: int) -> int:
    """[x == 1] + (-1)^k [x == -1] modulo mod."""
    sign = -1 if k % 2 else 1
    return int((x - 1) % mod == 0) + sign * int((x + 1) % mod == 0)


def T_id(P: TraceParams) -> Fraction:
    s = isqrt(P.q)
    if s * s != P.q:
        return Fraction(0)
    level = P.level
    return (euler_phi(level) * Fraction(P.k - 1, 24) * s ** (P.k - 2)
            * psi(level * P.M) * _pm_delta(s * P.d, level, P.k))


def _ell_weight(level: int, M: int, Lam: int) -> Fraction:
    return Fraction(euler_phi(Lam * Lam) * euler_phi(level // (M * Lam)), euler_phi(level // M))


def T_ell(P: TraceParams) -> Fraction:
    level, M = P.level, P.M
    ratio = Fraction(psi(level * level), psi(level * level // (M * M)))
    inner = sum((_ell_weight(level, M, Lam) * sum_U_H(level, Lam * M, P.q, P.d, P.k)
                 for Lam in divisors(P.L // M)), Fraction(0))
    return euler_phi(level) * ratio * inner


def T_ell_via_C(P: TraceParams) -> Fraction:
    """Elliptic term assembled from C_{level,M}(t, q, +-d) instead of H sums."""
    level, M, q, k = P.level, P.M, P.q, P.k
    sign = -1 if k % 2 else 1
    total = Fraction(0)
    for t in traces(q):
        u = cheb_u_norm(t, q, k - 2)
        if u:
            c = C_NM(level, M, t, q, P.d) + sign * C_NM(level, M, t, q, -P.d % level)
            total += u * c / 2
    return euler_phi(level) * total / 2


def _crt_general(a: int, m: int, b: int, n: int) -> int:
    """The x mod lcm(m, n) with x == a (mod m), x == b (mod n); caller ensures consistency."""
    lcm = m * n // gcd(m, n)
    for x in range(a % m, lcm, m):
        if (x - b) % n == 0:
            return x
    raise ValueError("inconsistent congruences")


def T_hyp(P: TraceParams) -> Fraction:
    """Hyperbolic term; tau runs over divisors of level*M with g = (tau, level*M/tau) | b - q/b."""
    level, M, q, k, d = P.level, P.M, P.q, P.k, P.d
    LM = level * M
    total = Fraction(0)
    for b in divisors(q):
        c = q // b
        inner = 0
        for tau in divisors(LM):
            g = gcd(tau, LM // tau)
            if (b - c) % g:
                continue
            y = _crt_general(b, tau, c, LM // tau)
            mod = level * gcd(M, g) // g
            val = _pm_delta(y * d, mod, k)
            if val:
                inner += euler_phi(g) * euler_phi(mod) * val
        total += min(b, c) ** (k - 1) * Fraction(inner, euler_phi(level))
    return euler_phi(level) * total / 4


def T_dual(P: TraceParams) -> Fraction:
    return Fraction(sigma(P.q) if P.k == 2 else 0)


def T_trace(P: TraceParams) -> Fraction:
    return T_id(P) - T_ell(P) - T_hyp(P) + T_dual(P)


def _split_level(level: int, q: int) -> tuple[int, int]:
    """Return (r, N) with level = p^r N and p prime to N."""
    p, _ = prime_power(q)
    r = 0
    while level % p == 0:
        level //= p
        r += 1
    return r, level


def T_N_lambda(level: int, lam: int, q: int, d: int, k: int) -> Fraction:
    """Elliptic sum at level p^r n1 over Lambda | L/lam, L = (d^2 q - 1, level)."""
    L = gcd(d * d * q - 1, level)
    if L % lam:
        raise ValueError(f"lambda={lam} does not divide (d^2 q - 1, level) = {L}")
    return sum((euler_phi(Lam * Lam) * euler_phi(level // (lam * Lam))
                * sum_U_H(level, lam * Lam, q, d, k)
                for Lam in divisors(L // lam)), Fraction(0))


def T_N_lambda_scaled(level: int, lam: int, q: int, d: int, k: int) -> Fraction:
    """Same quantity obtained by rescaling T_ell(level, lam)."""
    r, N = _split_level(level, q)
    ell = T_ell(TraceParams(N, lam, q, d, k, r))
    scale = Fraction(psi(level * level // (lam * lam)) * euler_phi(level // lam),
                     psi(level * level) * euler_phi(level))
    return scale * ell


def main_theorem_rhs(spec: AbelianSpec, q: int, k: int) -> Fraction:
    """Class-number side of the moment identity for A = Z/p^r n1 x Z/n2, r >= 1."""
    p, _ = prime_power(q)
    r, n1, n2 = spec.split(p)
    if r < 1:
        raise ValueError(f"p={p} must divide #A")
    if n1 % n2:
        raise ValueError(f"n2={n2} must divide n1={n1} (p-part of A must be cyclic)")
    if (q - 1) % n2:
        return Fraction(0)
    level = p**r * n1
    total = sum((phi_tilde(nu) * T_N_lambda(level, n2 * nu, q, 1, k)
                 for nu in divisors(gcd(q - 1, level) // n2)), Fraction(0))
    return total / (q * euler_phi(level // n2))


def dirichlet_collapse_sides(level: int, n2: int, q: int, d: int, k: int) -> tuple[Fraction, Fraction]:
    L = gcd(d * d * q - 1, level)
    if L % n2:
        raise ValueError(f"need d^2 q == 1 mod n2={n2}")
    lhs = sum((phi_tilde(nu) * T_N_lambda(level, n2 * nu, q, d, k)
               for nu in divisors(L // n2)), Fraction(0)) / euler_phi(level // n2)
    return lhs, sum_U_H(level, n2, q, d, k)


def dirichlet_collapse_check(level: int, n2: int, q: int, d: int, k: int) -> bool:
    lhs, rhs = dirichlet_collapse_sides(level, n2, q, d, k)
    return lhs == rhs
