"""Class numbers of imaginary quadratic orders from reduced forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt


@dataclass(frozen=True)
class ReducedForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def _check_disc(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")


def reduced_forms(D: int) -> list[ReducedForm]:
    """Primitive reduced forms (a, b, c) of discriminant D."""
    _check_disc(D)
    out = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append(ReducedForm(a, b, c))
    return out


@lru_cache(maxsize=None)
def class_number(D: int) -> int:
    return len(reduced_forms(D))


@lru_cache(maxsize=None)
def h_w(D: int) -> Fraction:
    """Class number weighted by 1/3 at D = -3 and 1/2 at D = -4; zero off discriminants."""
    if D >= 0:
        raise ValueError(f"{D} is not negative")
    if D % 4 in (2, 3):
        return Fraction(0)
    h = class_number(D)
    if D == -3:
        return Fraction(h, 3)
    if D == -4:
        return Fraction(h, 2)
    return Fraction(h)


def hurwitz_H(Delta) -> Fraction:
    """Hurwitz-Kronecker class number, extended by 0 off negative discriminants."""
    Delta = Fraction(Delta)
    if Delta.denominator != 1 or Delta >= 0:
        return Fraction(0)
    return _hurwitz_int(int(Delta))


@lru_cache(maxsize=None)
def _hurwitz_int(D: int) -> Fraction:
    if D % 4 in (2, 3):
        return Fraction(0)
    total = Fraction(0)
    f = 1
    while f * f <= -D:
        if D % (f * f) == 0:
            total += h_w(D // (f * f))
        f += 1
    return total
