"""Elliptic curves over F_q: traces, group shapes and weighted censuses.

The census never builds isomorphism classes. Each nonsingular Weierstrass
tuple gets weight 1 / (q^3 (q - 1)), the order of the substitution group
(u, r, s, t); by orbit-stabilizer the weights of one class add up to
1 / #Aut(E).
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, isqrt

from . import kernel
from .chebyshev import cheb_u_norm
from .finitefield import FieldCtx, FieldElem, enumerate_field
from .numtheory import valuation


@dataclass(frozen=True)
class WeierstrassCurve:
    ctx: FieldCtx
    a1: FieldElem
    a2: FieldElem
    a3: FieldElem
    a4: FieldElem
    a6: FieldElem

    @classmethod
    def from_coeffs(cls, ctx: FieldCtx, a1=0, a2=0, a3=0, a4=0, a6=0) -> WeierstrassCurve:
        """Coefficients given as FieldElem or as integers (prime subfield)."""
        def conv(a):
            return a if isinstance(a, FieldElem) else ctx.elem(a)
        return cls(ctx, conv(a1), conv(a2), conv(a3), conv(a4), conv(a6))

    @classmethod
    def from_indices(cls, ctx: FieldCtx, idx) -> WeierstrassCurve:
        return cls(ctx, *(ctx.from_index(i) for i in idx))

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coeffs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def contains(self, x: FieldElem, y: FieldElem) -> bool:
        a1, a2, a3, a4, a6 = self.coeffs
        return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6


@dataclass(frozen=True)
class GroupShape:
    """E(F_q) isomorphic to Z/n1 x Z/n2 with n2 | n1."""

    n1: int
    n2: int

    @property
    def order(self) -> int:
        return self.n1 * self.n2


@dataclass(frozen=True)
class AbelianSpec:
    """The group Z/m1 x Z/m2, m2 | m1."""

    m1: int
    m2: int = 1

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1 or self.m1 % self.m2:
            raise ValueError(f"invalid abelian group Z/{self.m1} x Z/{self.m2}")

    @property
    def order(self) -> int:
        return self.m1 * self.m2

    def split(self, p: int) -> tuple[int, int, int]:
        """Return (r, n1, n2) with m1 = p^r n1 and n2 = m2."""
        r = valuation(p, self.m1)
        return r, self.m1 // p**r, self.m2


def discriminant(curve: WeierstrassCurve) -> FieldElem:
    b2, b4, b6, b8 = curve.b_invariants()
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def affine_points(curve: WeierstrassCurve) -> list[tuple[FieldElem, FieldElem]]:
    elems = enumerate_field(curve.ctx)
    return [(x, y) for x in elems for y in elems if curve.contains(x, y)]


def point_count(curve: WeierstrassCurve) -> int:
    return len(affine_points(curve)) + 1


def trace(curve: WeierstrassCurve) -> int:
    return curve.ctx.q + 1 - point_count(curve)


def negate(curve: WeierstrassCurve, P):
    if P is None:
        return None
    x, y = P
    return (x, -y - curve.a1 * x - curve.a3)


def add_points(curve: WeierstrassCurve, P, Q):
    """Group law on the long Weierstrass model; None is the point at infinity."""
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = curve.coeffs
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y2 == -y1 - a1 * x1 - a3:
            return None
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def point_order(curve: WeierstrassCurve, P) -> int:
    k, Q = 1, P
    while Q is not None:
        Q = add_points(curve, Q, P)
        k += 1
    return k


def group_shape(curve: WeierstrassCurve) -> GroupShape:
    """Exponent from the orders of all points; n2 = #E / exponent."""
    pts = affine_points(curve)
    n = len(pts) + 1
    ex = 1
    for P in pts:
        o = point_order(curve, P)
        ex = ex * o // gcd(ex, o)
    return GroupShape(ex, n // ex)


def embeds(spec: AbelianSpec, shape: GroupShape) -> bool:
    return shape.n1 % spec.m1 == 0 and shape.n2 % spec.m2 == 0


def transform(curve: WeierstrassCurve, u, r, s, t) -> WeierstrassCurve:
    """Coefficients after x = u^2 x' + r, y = u^3 y' + u^2 s x' + t."""
    a1, a2, a3, a4, a6 = curve.coeffs
    ui = u.inverse()
    ui2 = ui * ui
    ui3 = ui2 * ui
    return WeierstrassCurve(
        curve.ctx,
        ui * (a1 + 2 * s),
        ui2 * (a2 - s * a1 + 3 * r - s * s),
        ui3 * (a3 + r * a1 + 2 * t),
        ui2 * ui2 * (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t),
        ui3 * ui3 * (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1),
    )


def substitutions(ctx: FieldCtx):
    elems = enumerate_field(ctx)
    return [(u, r, s, t) for u in elems[1:] for r, s, t in product(elems, repeat=3)]


def aut_count(curve: WeierstrassCurve) -> int:
    """Substitutions (u, r, s, t) fixing the curve; a1' depends on (u, s) only, a2' on (u, s, r)."""
    a1, a2, a3, a4, a6 = curve.coeffs
    elems = enumerate_field(curve.ctx)
    count = 0
    for u in elems[1:]:
        ui = u.inverse()
        for s in elems:
            if ui * (a1 + 2 * s) != a1:
                continue
            for r in elems:
                if ui * ui * (a2 - s * a1 + 3 * r - s * s) != a2:
                    continue
                count += sum(1 for t in elems if transform(curve, u, r, s, t) == curve)
    return count


# --- census -----------------------------------------------------------------

_tally_cache: dict[FieldCtx, dict[tuple[int, int], int]] = {}


def _tally_chunk(args):
    return kernel.tally(*args)


def shape_tally(ctx: FieldCtx, workers: int = 1) -> dict[tuple[int, int, int], int]:
    """Count nonsingular tuples by (trace, n1, n2); cached per field."""
    if ctx not in _tally_cache:
        tb = ctx.tables
        q = ctx.q
        bounds = [q * i // workers for i in range(workers + 1)]
        jobs = [(q, ctx.p, tb.add, tb.mul, tb.neg, tb.inv, lo, hi)
                for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as ex:
                parts = list(ex.map(_tally_chunk, jobs))
        else:
            parts = [_tally_chunk(j) for j in jobs]
        merged: dict[tuple[int, int], int] = {}
        for part in parts:
            for key, c in part.items():
                merged[key] = merged.get(key, 0) + c
        _tally_cache[ctx] = merged
    out = {}
    for (t, n2), c in sorted(_tally_cache[ctx].items()):
        n = ctx.q + 1 - t
        out[(t, n // n2, n2)] = c
    return out


def clear_cache() -> None:
    _tally_cache.clear()


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CensusReport:
    q: int
    buckets: dict[int, tuple[Fraction, Fraction]]  # t -> (mass_all, mass_A)
    total_mass: Fraction

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "buckets": [{"t": t, "mass_all": _fmt(a), "mass_A": _fmt(b)}
                        for t, (a, b) in sorted(self.buckets.items())],
            "total_mass": _fmt(self.total_mass),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def census(ctx: FieldCtx, spec: AbelianSpec | None = None, workers: int = 1) -> CensusReport:
    spec = spec or AbelianSpec(1, 1)
    q = ctx.q
    weight = Fraction(1, q**3 * (q - 1))
    all_, with_a = {}, {}
    for (t, n1, n2), c in shape_tally(ctx, workers).items():
        all_[t] = all_.get(t, 0) + c
        if embeds(spec, GroupShape(n1, n2)):
            with_a[t] = with_a.get(t, 0) + c
    buckets = {t: (c * weight, with_a.get(t, 0) * weight) for t, c in sorted(all_.items())}
    return CensusReport(q, buckets, sum(all_.values()) * weight)


def hasse_bound(q: int) -> int:
    """Largest t with t^2 <= 4q."""
    return isqrt(4 * q)


def prob_class(spec: AbelianSpec, t: int, ctx: FieldCtx) -> Fraction:
    """Weighted share of classes with trace t containing the group spec, over q."""
    if t * t > 4 * ctx.q:
        return Fraction(0)
    report = census(ctx, spec)
    return report.buckets.get(t, (0, Fraction(0)))[1] / ctx.q


def moment(spec: AbelianSpec, k: int, ctx: FieldCtx) -> Fraction:
    if k < 2:
        raise ValueError("weight k must be >= 2")
    q = ctx.q
    report = census(ctx, spec)
    return sum((cheb_u_norm(t, q, k - 2) * mass_a for t, (_, mass_a) in report.buckets.items()),
               Fraction(0)) / q
