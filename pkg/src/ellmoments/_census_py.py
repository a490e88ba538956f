"""Pure-Python census kernel.

Walks every long Weierstrass tuple (a1, a2, a3, a4, a6) with a1 in
[a1_lo, a1_hi), skips singular ones, and tallies (trace, n2) where the
point group is Z/n1 x Z/n2 with n1 * n2 = #E. Field elements are integer
indices into the flat tables built by ``finitefield.FieldTables``.
"""

from math import gcd


def tally(q, p, add, mul, neg, inv, a1_lo, a1_hi):
    A = add
    M = mul
    N = neg
    I = inv

    def c(k):
        return k % p

    # roots[b*q + r] lists y with y^2 + b*y = r
    roots = [[] for _ in range(q * q)]
    for b in range(q):
        for y in range(q):
            r = A[M[y * q + y] * q + M[b * q + y]]
            roots[b * q + r].append(y)
    sq = [M[x * q + x] for x in range(q)]
    cube = [M[sq[x] * q + x] for x in range(q)]
    two, three, four = c(2), c(3), c(4)
    m8, m27, nine = c(-8), c(-27), c(9)
    qm1 = q - 1
    out = {}

    for a1 in range(a1_lo, a1_hi):
        a1sq = sq[a1]
        a1x = [M[a1 * q + x] for x in range(q)]
        for a2 in range(q):
            b2 = A[a1sq * q + M[four * q + a2]]
            b2sq = sq[b2]
            a2x2 = [M[a2 * q + sq[x]] for x in range(q)]
            for a3 in range(q):
                lin = [A[a1x[x] * q + a3] for x in range(q)]
                a1a3 = M[a1 * q + a3]
                a3sq = sq[a3]
                for a4 in range(q):
                    b4 = A[M[two * q + a4] * q + a1a3]
                    base = [A[A[cube[x] * q + a2x2[x]] * q + M[a4 * q + x]] for x in range(q)]
                    # terms of b8 not involving a6: -a1 a3 a4 + a2 a3^2 - a4^2
                    b8_part = A[A[N[M[a1a3 * q + a4]] * q + M[a2 * q + a3sq]] * q + N[sq[a4]]]
                    t1 = M[m8 * q + M[sq[b4] * q + b4]]
                    b2b4 = M[b2 * q + b4]
                    for a6 in range(q):
                        b6 = A[a3sq * q + M[four * q + a6]]
                        b8 = A[b8_part * q + M[A[a1sq * q + M[four * q + a2]] * q + a6]]
                        disc = A[A[N[M[b2sq * q + b8]] * q + t1] * q
                                 + A[M[m27 * q + sq[b6]] * q + M[nine * q + M[b2b4 * q + b6]]]]
                        if disc == 0:
                            continue
                        pts = []
                        for x in range(q):
                            for y in roots[lin[x] * q + A[base[x] * q + a6]]:
                                pts.append((x, y))
                        n = len(pts) + 1
                        n2 = 1
                        if _may_split(n, gcd(n, qm1)):
                            n2 = n // _exponent(pts, n, qm1, a1, a2, a3, a4, a6, A, M, N, I, sq)
                        key = (q + 1 - n, n2)
                        out[key] = out.get(key, 0) + 1
    return out


def _may_split(n, g):
    # some m > 1 with m | g and m^2 | n, i.e. the group might not be cyclic
    return any(g % m == 0 and n % (m * m) == 0 for m in range(2, g + 1))


def _exponent(pts, n, qm1, a1, a2, a3, a4, a6, A, M, N, I, sq):
    q = qm1 + 1

    def sub(u, v):
        return A[u * q + N[v]]

    def add_pts(P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            # Q == -P  <=>  y2 == -y1 - a1 x1 - a3
            if y2 == N[A[A[y1 * q + M[a1 * q + x1]] * q + a3]]:
                return None
            den = A[A[A[y1 * q + y1] * q + M[a1 * q + x1]] * q + a3]
            x1sq = sq[x1]
            num = sub(A[A[A[A[x1sq * q + x1sq] * q + x1sq] * q + M[A[a2 * q + a2] * q + x1]] * q + a4],
                      M[a1 * q + y1])
            lam = M[num * q + I[den]]
            num2 = sub(A[A[N[M[x1sq * q + x1]] * q + M[a4 * q + x1]] * q + A[a6 * q + a6]],
                       M[a3 * q + y1])
            nu = M[num2 * q + I[den]]
        else:
            inv_dx = I[sub(x2, x1)]
            lam = M[sub(y2, y1) * q + inv_dx]
            nu = M[sub(M[y1 * q + x2], M[y2 * q + x1]) * q + inv_dx]
        x3 = sub(sub(sub(A[sq[lam] * q + M[a1 * q + lam]], a2), x1), x2)
        y3 = sub(sub(N[M[A[lam * q + a1] * q + x3]], nu), a3)
        return (x3, y3)

    # multiples of a walked point have orders dividing the running lcm: skip them
    seen = set()
    ex = 1
    for P in pts:
        if P in seen:
            continue
        k, Q = 1, P
        while Q is not None:
            seen.add(Q)
            Q = add_pts(Q, P)
            k += 1
        ex = ex * k // gcd(ex, k)
        if ex == n or not _may_split(n, gcd(n // ex, qm1)):
            return n
    return ex
