import math

from hypothesis import given, strategies as st

from ellmoments.chebyshev import cheb_u_norm


def test_examples():
    assert cheb_u_norm(5, 7, 0) == 1
    assert cheb_u_norm(3, 7, 2) == 9 - 7
    assert cheb_u_norm(1, 2, 10) == 23


@given(st.integers(-20, 20), st.integers(1, 32), st.integers(0, 20))
def test_parity(t, q, j):
    assert cheb_u_norm(-t, q, j) == (-1) ** j * cheb_u_norm(t, q, j)


def test_classical_value_at_one():
    assert [cheb_u_norm(2, 1, j) for j in range(12)] == list(range(1, 13))


@given(st.integers(1, 32), st.integers(0, 20), st.data())
def test_trigonometric_form(q, j, data):
    bound = math.isqrt(4 * q - 1)
    t = data.draw(st.integers(-bound, bound))
    theta = math.acos(t / (2 * math.sqrt(q)))
    expected = q ** (j / 2) * math.sin((j + 1) * theta) / math.sin(theta)
    assert math.isclose(cheb_u_norm(t, q, j), expected, rel_tol=1e-9, abs_tol=1e-6 * q ** (j / 2))
