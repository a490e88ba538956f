"""Arithmetic in F_{p^n} with elements stored as coefficient vectors.

Element ``c_0 + c_1 x + ... + c_{n-1} x^{n-1}`` has the integer index
``sum c_i p^i``; ``enumerate_field`` walks indices 0..q-1, so zero comes first
and the prime subfield occupies indices 0..p-1. The same indexing is used by
the lookup tables handed to the census kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .numtheory import is_prime


def _poly_mod(a: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    """Reduce a (ascending coefficients) modulo the monic polynomial mod."""
    a = [c % p for c in a]
    n = len(mod) - 1
    for i in range(len(a) - 1, n - 1, -1):
        c = a[i]
        if c:
            for j in range(n + 1):
                a[i - n + j] = (a[i - n + j] - c * mod[j]) % p
    a = a[:n] if n else []
    return a + [0] * (n - len(a))


def _has_factor_of_degree(f: tuple[int, ...], d: int, p: int) -> bool:
    for low in product(range(p), repeat=d):
        g = low + (1,)
        if not any(_poly_mod(list(f), g, p)):
            return True
    return False


def is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic f over F_p by trial division (small degree only)."""
    n = len(f) - 1
    if n == 1:
        return True
    return not any(_has_factor_of_degree(f, d, p) for d in range(1, n // 2 + 1))


@dataclass(frozen=True)
class FieldCtx:
    p: int
    n: int
    modulus: tuple[int, ...]  # monic, ascending degree, length n + 1

    @property
    def q(self) -> int:
        return self.p**self.n

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, modulus={self.modulus})"

    def elem(self, coeffs) -> FieldElem:
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        coeffs = list(coeffs) + [0] * (self.n - len(coeffs))
        if len(coeffs) != self.n:
            raise ValueError("too many coefficients")
        return FieldElem(self, tuple(c % self.p for c in coeffs))

    def from_index(self, i: int) -> FieldElem:
        coeffs = []
        for _ in range(self.n):
            i, c = divmod(i, self.p)
            coeffs.append(c)
        return FieldElem(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElem:
        return self.from_index(0)

    @property
    def one(self) -> FieldElem:
        return self.from_index(1)

    @property
    def gen(self) -> FieldElem:
        """The class of x (equal to a constant when n == 1)."""
        return self.elem(_poly_mod([0, 1], self.modulus, self.p))

    @cached_property
    def tables(self) -> FieldTables:
        return FieldTables.build(self)


def ctx_new(p: int, n: int = 1) -> FieldCtx:
    """F_{p^n} with the lexicographically smallest monic irreducible modulus.

    Candidates are ordered by their lower coefficients (c_0, ..., c_{n-1})
    compared from c_0 upwards.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("degree must be >= 1")
    for low in product(range(p), repeat=n):
        # product() varies the last slot fastest, so c_0 is the most significant key
        f = low + (1,)
        if is_irreducible(f, p):
            return FieldCtx(p, n, f)
    raise AssertionError("no irreducible polynomial found")


def field_of_order(q: int) -> FieldCtx:
    from .numtheory import prime_power

    p, n = prime_power(q)
    return ctx_new(p, n)


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx = field(repr=False)
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.ctx.p + c
        return i

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.ctx.elem(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        prod_ = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        return FieldElem(self.ctx, tuple(_poly_mod(prod_, self.ctx.modulus, self.ctx.p)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElem:
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(self.ctx))
        return self ** (self.ctx.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __repr__(self) -> str:
        return f"F{self.ctx.q}{list(self.coeffs)}"


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def equals(a: FieldElem, b: FieldElem) -> bool:
    return a == b


def enumerate_field(ctx: FieldCtx) -> list[FieldElem]:
    return [ctx.from_index(i) for i in range(ctx.q)]


@dataclass(frozen=True)
class FieldTables:
    """Flat index tables: add[a*q + b], mul[a*q + b], neg[a], inv[a] (inv[0] = 0)."""

    q: int
    p: int
    add: tuple[int, ...]
    mul: tuple[int, ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]

    @classmethod
    def build(cls, ctx: FieldCtx) -> FieldTables:
        elems = enumerate_field(ctx)
        q = ctx.q
        add_t = [0] * (q * q)
        mul_t = [0] * (q * q)
        for a in elems:
            for b in elems:
                add_t[a.index * q + b.index] = (a + b).index
                mul_t[a.index * q + b.index] = (a * b).index
        neg_t = [(-a).index for a in elems]
        inv_t = [0] * q
        for i in range(1, q):
            for j in range(1, q):
                if mul_t[i * q + j] == 1:
                    inv_t[i] = j
                    break
        return cls(q, ctx.p, tuple(add_t), tuple(mul_t), tuple(neg_t), tuple(inv_t))
