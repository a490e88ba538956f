import math
from fractions import Fraction

import pytest

from ellmoments.quadforms import class_number, h_w, hurwitz_H, reduced_forms


def test_class_numbers():
    assert class_number(-3) == 1
    assert class_number(-4) == 1
    assert class_number(-23) == 3
    forms = {(f.a, f.b, f.c) for f in reduced_forms(-23)}
    assert forms == {(1, 1, 6), (2, 1, 3), (2, -1, 3)}


@pytest.mark.parametrize("D", [0, 5, -1, -2, -5])
def test_class_number_rejects(D):
    with pytest.raises(ValueError):
        class_number(D)


def test_weighted():
    assert h_w(-3) == Fraction(1, 3)
    assert h_w(-4) == Fraction(1, 2)
    assert h_w(-7) == 1
    assert h_w(-6) == 0
    with pytest.raises(ValueError):
        h_w(4)


def test_hurwitz_values():
    assert hurwitz_H(-3) == Fraction(1, 3)
    assert hurwitz_H(-16) == Fraction(3, 2)
    assert hurwitz_H(Fraction(-7, 4)) == 0
    assert hurwitz_H(5) == 0
    assert hurwitz_H(-23) == 3


def test_reduced_form_shape():
    for D in range(-3, -400, -1):
        if D % 4 in (2, 3):
            continue
        assert class_number(D) >= 1
        assert hurwitz_H(D) >= h_w(D)
        for f in reduced_forms(D):
            assert abs(f.b) <= f.a <= f.c
            if abs(f.b) == f.a or f.a == f.c:
                assert f.b >= 0


def test_kronecker_hurwitz_relation():
    # classical relation, with H(0) = -1/12 supplied by hand at t = +-2 sqrt(n)
    for n in range(1, 60):
        lhs = sum(hurwitz_H(t * t - 4 * n) for t in range(-2 * n, 2 * n + 1))
        if math.isqrt(n) ** 2 == n:
            lhs += 2 * Fraction(-1, 12)
        divs = [d for d in range(1, n + 1) if n % d == 0]
        assert lhs == 2 * sum(divs) - sum(min(d, n // d) for d in divs)
