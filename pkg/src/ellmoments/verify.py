"""Grid runners for the identities checked by ``verify-main`` and ``verify-lemmas``.

Each runner yields ``Check`` records; the CLI serializes them and the
acceptance tests assert on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from . import curves
from .classsum import H_sum, H_sum_p_level
from .curves import AbelianSpec
from .finitefield import field_of_order
from .hecke_congruence import C_NM, CongParams, D, W, all_lift_values, lift_value, square_divisors
from .numtheory import divisors, euler_phi, prime_power, psi, units
from .oracles import level1_cusp_basis
from .quadforms import hurwitz_H
from .traceformula import (
    TraceParams,
    T_ell,
    T_ell_via_C,
    T_trace,
    dirichlet_collapse_sides,
    main_theorem_rhs,
    traces,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "lhs": fmt(self.lhs), "rhs": fmt(self.rhs)}


def fmt(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _check(name: str, lhs, rhs) -> Check:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return Check(name, lhs == rhs, lhs, rhs)


def _tag(**kw) -> str:
    return " ".join(f"{k}={v}" for k, v in kw.items())


# --- defaults ------------------------------------------------------------------

HURWITZ_DISCS = (3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 23)
LEVEL1_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13)
LEVEL1_CUSP_K = (12, 16, 18, 20, 22, 26)
LEVEL1_EMPTY_K = (2, 4, 6, 8, 10, 14)
MASS_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13)
PROB_Q = (5, 7, 11, 13)
MAIN_Q = (2, 3, 4, 5, 8, 9)
MAIN_K = (2, 4, 6, 8, 10, 12, 14, 16)
TRACE_Q = (2, 3, 4, 5, 7, 8, 9)


def groups(m1_max: int) -> Iterator[AbelianSpec]:
    for m1 in range(1, m1_max + 1):
        for m2 in divisors(m1):
            yield AbelianSpec(m1, m2)


# --- independent Hurwitz oracle --------------------------------------------------

def hurwitz_bruteforce(n: int) -> Fraction:
    """H(-n) by listing every reduced form (a, b, c), primitive or not, of discriminant -n."""
    total = Fraction(0)
    a = 1
    while 3 * a * a <= n:
        for b in range(-a + 1, a + 1):
            num = b * b + n
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if a == b == c:
                total += Fraction(1, 3)
            elif b == 0 and a == c:
                total += Fraction(1, 2)
            else:
                total += 1
        a += 1
    return total


def hurwitz_checks(discs: Iterable[int] = HURWITZ_DISCS) -> Iterator[Check]:
    for n in discs:
        yield _check(f"hurwitz[{_tag(Delta=-n)}]", hurwitz_H(-n), hurwitz_bruteforce(n))


# --- trace formula ---------------------------------------------------------------

def level1_checks(qs=LEVEL1_Q, cusp_ks=LEVEL1_CUSP_K, empty_ks=LEVEL1_EMPTY_K) -> Iterator[Check]:
    if not qs:
        return
    prec = max(qs)
    for k in cusp_ks:
        (f,) = level1_cusp_basis(k, prec)
        for q in qs:
            yield _check(f"level1_trace[{_tag(q=q, k=k)}]", T_trace(TraceParams(1, 1, q, 1, k)), f[q])
    for k in empty_ks:
        for q in qs:
            yield _check(f"level1_trace[{_tag(q=q, k=k)}]", T_trace(TraceParams(1, 1, q, 1, k)), 0)


def trace_grid(N_max: int = 10, qs=TRACE_Q, ks=range(2, 17)) -> Iterator[TraceParams]:
    for N in range(1, N_max + 1):
        for M in divisors(N):
            for q in qs:
                if gcd(N, q) != 1:
                    continue
                for d in units(N):
                    if (d * d * q - 1) % M:
                        continue
                    for k in ks:
                        yield TraceParams(N, M, q, d, k)


def integrality_checks(**kw) -> Iterator[Check]:
    for P in trace_grid(**kw):
        v = T_trace(P)
        name = f"integrality[{_tag(N=P.N, M=P.M, q=P.q, d=P.d, k=P.k)}]"
        yield Check(name, v.denominator == 1, v, Fraction(round(v)))


def two_route_checks(**kw) -> Iterator[Check]:
    for P in trace_grid(**kw):
        yield _check(f"T_ell_two_routes[{_tag(N=P.N, M=P.M, q=P.q, d=P.d, k=P.k)}]",
                     T_ell(P), T_ell_via_C(P))


# --- census side -----------------------------------------------------------------

def mass_checks(qs=MASS_Q, workers: int = 1) -> Iterator[Check]:
    for q in qs:
        report = curves.census(field_of_order(q), workers=workers)
        yield _check(f"mass[{_tag(q=q)}]", report.total_mass, q)


def prob_class_checks(qs=PROB_Q, m1_max: int = 16, workers: int = 1) -> Iterator[Check]:
    """q P(A, t) against H_{m1,m2}(t, q, 1) at ordinary traces, #A prime to q."""
    for q in qs:
        ctx = field_of_order(q)
        p = ctx.p
        curves.shape_tally(ctx, workers)
        for spec in groups(m1_max):
            if gcd(spec.order, q) != 1:
                continue
            params = CongParams(spec.m1, spec.m2, q, 1)
            report = curves.census(ctx, spec)
            for t in traces(q):
                if t % p == 0:
                    continue
                lhs = report.buckets.get(t, (0, Fraction(0)))[1]
                yield _check(f"prob_class[{_tag(A=f'{spec.m1},{spec.m2}', q=q, t=t)}]",
                             lhs, H_sum(params, t))


def admissible(spec: AbelianSpec, p: int) -> bool:
    return spec.m1 % p == 0 and spec.m2 % p != 0


def main_checks(qs=MAIN_Q, m1_max: int = 18, ks=MAIN_K, workers: int = 1) -> Iterator[Check]:
    for q in qs:
        ctx = field_of_order(q)
        p = ctx.p
        curves.shape_tally(ctx, workers)
        for spec in groups(m1_max):
            if not admissible(spec, p):
                continue
            a = f"{spec.m1},{spec.m2}"
            for k in ks:
                lhs = curves.moment(spec, k, ctx)
                yield _check(f"main_theorem[{_tag(A=a, q=q, k=k)}]",
                             lhs, main_theorem_rhs(spec, q, k))
                if (q - 1) % spec.m2:
                    yield _check(f"main_theorem_vanishing[{_tag(A=a, q=q, k=k)}]", lhs, 0)


def determinism_checks(qs=(5, 7), workers: int = 4) -> Iterator[Check]:
    for q in qs:
        ctx = field_of_order(q)
        curves.clear_cache()
        one = curves.census(ctx, workers=1).to_json()
        curves.clear_cache()
        many = curves.census(ctx, workers=workers).to_json()
        name = f"determinism[{_tag(q=q, workers=workers)}]"
        yield Check(name, one == many, Fraction(len(one)), Fraction(len(many)))


# --- lemmas ----------------------------------------------------------------------

def prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(2, limit + 1):
        try:
            prime_power(q)
        except ValueError:
            continue
        out.append(q)
    return out


def lift_checks(n12_max: int = 60, q_max: int = 27) -> Iterator[Check]:
    for q in prime_powers(q_max):
        for n1 in range(1, n12_max + 1):
            for n2 in divisors(n1):
                if n1 * n2 > n12_max:
                    continue
                for d in units(n1):
                    if (d * d * q - 1) % n2:
                        continue
                    params = CongParams(n1, n2, q, d)
                    for n in divisors(n1 * n2):
                        modulus = n1 * n // gcd(n1, n)
                        vals = all_lift_values(params, n, modulus)
                        v = lift_value(params, n)
                        name = f"lift_independence[{_tag(n1=n1, n2=n2, q=q, d=d, n=n)}]"
                        yield Check(name, vals == {v}, Fraction(len(vals)), Fraction(1))


def _p_level_grid(qs, n1_max, rs):
    for q in qs:
        p, _ = prime_power(q)
        for r in rs:
            for n1 in range(1, n1_max + 1):
                if n1 % p == 0:
                    continue
                yield q, p, r, n1


def h_factorization_checks(qs=(2, 3, 4, 8, 9), n1_max: int = 6, rs=(1, 2)) -> Iterator[Check]:
    for q, p, r, n1 in _p_level_grid(qs, n1_max, rs):
        pr = p**r
        for n2 in divisors(n1):
            for d in units(pr * n1):
                if (d * d * q - 1) % n2:
                    continue
                big = CongParams(pr * n1, n2, q, d)
                small = CongParams(n1, n2, q, d % n1 if n1 > 1 else 0)
                for t in traces(q):
                    name = f"H_factorization[{_tag(p=p, r=r, n1=n1, n2=n2, q=q, d=d, t=t)}]"
                    yield _check(name, H_sum_p_level(p, r, n1, n2, q, d, t),
                                 D(big, t, pr) * H_sum(small, t))


def w_lemma_checks(qs=TRACE_Q, rs=(1, 2)) -> Iterator[Check]:
    for q in qs:
        p, _ = prime_power(q)
        for r in rs:
            pr = p**r
            for d in units(pr):
                params = CongParams(pr, 1, q, d)
                for t in traces(q):
                    for m in square_divisors(t * t - 4 * q):
                        name = f"W_lemma[{_tag(p=p, r=r, q=q, d=d, t=t, m=m)}]"
                        yield _check(name, W(pr, 1, m, d, t, q), D(params, t, pr))


def c_factorization_checks(qs=TRACE_Q, N_max: int = 12, rs=(1, 2)) -> Iterator[Check]:
    for q, p, r, N in _p_level_grid(qs, N_max, rs):
        pr = p**r
        for M in divisors(N):
            for d in units(pr * N):
                if (d * d * q - 1) % M:
                    continue
                params = CongParams(pr * N, M, q, d)
                for t in traces(q):
                    name = f"C_factorization[{_tag(p=p, r=r, N=N, M=M, q=q, d=d, t=t)}]"
                    yield _check(name, C_NM(pr * N, M, t, q, d),
                                 D(params, t, pr) * C_NM(N, M, t, q, d % N if N > 1 else 0))


def c_from_h(N: int, M: int, t: int, q: int, d: int) -> Fraction:
    """C_{N,M}(t, q, d) rebuilt from class-number sums H_{N, Lambda M}."""
    L = gcd(d * d * q - 1, N)
    inner = Fraction(0)
    for Lam in divisors(L // M):
        w = Fraction(euler_phi(Lam * Lam) * euler_phi(N // (M * Lam)), euler_phi(N // M))
        inner += w * H_sum(CongParams(N, Lam * M, q, d), t)
    return 2 * Fraction(psi(N * N), psi(N * N // (M * M))) * inner


def c_vs_h_checks(qs=TRACE_Q, N_max: int = 12) -> Iterator[Check]:
    for q in qs:
        for N in range(1, N_max + 1):
            if gcd(N, q) != 1:
                continue
            for M in divisors(N):
                for d in units(N):
                    if (d * d * q - 1) % M:
                        continue
                    for t in traces(q):
                        name = f"C_vs_H[{_tag(N=N, M=M, q=q, d=d, t=t)}]"
                        yield _check(name, C_NM(N, M, t, q, d), c_from_h(N, M, t, q, d))


def collapse_checks(qs=MAIN_Q, n1_max: int = 6, rs=(1, 2), ks=(2, 3, 4, 6, 12)) -> Iterator[Check]:
    for q, p, r, n1 in _p_level_grid(qs, n1_max, rs):
        level = p**r * n1
        for n2 in divisors(n1):
            for d in units(level):
                if (d * d * q - 1) % n2:
                    continue
                for k in ks:
                    lhs, rhs = dirichlet_collapse_sides(level, n2, q, d, k)
                    yield _check(f"dirichlet_collapse[{_tag(level=level, n2=n2, q=q, d=d, k=k)}]",
                                 lhs, rhs)


LEMMAS = {
    "lift": lift_checks,
    "h-factorization": h_factorization_checks,
    "w-lemma": w_lemma_checks,
    "c-factorization": c_factorization_checks,
    "c-vs-h": c_vs_h_checks,
    "collapse": collapse_checks,
}
