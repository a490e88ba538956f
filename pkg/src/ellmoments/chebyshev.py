"""Integer-normalized Chebyshev polynomials of the second kind."""


def cheb_u_norm(t: int, q: int, j: int) -> int:
    """Return q**(j/2) * U_j(t / (2 sqrt q)) as an exact integer.

    Uses V_0 = 1, V_1 = t, V_j = t V_{j-1} - q V_{j-2}, which never leaves Z.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    prev, cur = 0, 1
    for _ in range(j):
        prev, cur = cur, t * cur - q * prev
    return cur
