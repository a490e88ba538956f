# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; same contract as ``_census_py.tally``."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXPTS = 256


cdef inline int _gcd(int a, int b) nogil:
    while b:
        a, b = b, a % b
    return a


cdef struct Field:
    int q
    int *add
    int *mul
    int *neg
    int *inv
    int *sq


cdef inline int fadd(Field *F, int a, int b) nogil:
    return F.add[a * F.q + b]

cdef inline int fmul(Field *F, int a, int b) nogil:
    return F.mul[a * F.q + b]

cdef inline int fsub(Field *F, int a, int b) nogil:
    return F.add[a * F.q + F.neg[b]]


cdef int _add_pts(Field *F, int a1, int a2, int a3, int a4, int a6,
                  int x1, int y1, int x2, int y2, int *x3, int *y3) nogil:
    """Return 0 for the point at infinity, 1 otherwise (result in x3, y3)."""
    cdef int q = F.q
    cdef int den, num, lam, nu, x1sq, inv_dx
    if x1 == x2:
        if y2 == F.neg[fadd(F, fadd(F, y1, fmul(F, a1, x1)), a3)]:
            return 0
        den = fadd(F, fadd(F, fadd(F, y1, y1), fmul(F, a1, x1)), a3)
        x1sq = F.sq[x1]
        num = fsub(F, fadd(F, fadd(F, fadd(F, fadd(F, x1sq, x1sq), x1sq),
                                   fmul(F, fadd(F, a2, a2), x1)), a4),
                   fmul(F, a1, y1))
        lam = fmul(F, num, F.inv[den])
        num = fsub(F, fadd(F, fadd(F, F.neg[fmul(F, x1sq, x1)], fmul(F, a4, x1)),
                           fadd(F, a6, a6)),
                   fmul(F, a3, y1))
        nu = fmul(F, num, F.inv[den])
    else:
        inv_dx = F.inv[fsub(F, x2, x1)]
        lam = fmul(F, fsub(F, y2, y1), inv_dx)
        nu = fmul(F, fsub(F, fmul(F, y1, x2), fmul(F, y2, x1)), inv_dx)
    x3[0] = fsub(F, fsub(F, fsub(F, fadd(F, F.sq[lam], fmul(F, a1, lam)), a2), x1), x2)
    y3[0] = fsub(F, fsub(F, F.neg[fmul(F, fadd(F, lam, a1), x3[0])], nu), a3)
    return 1


cdef bint _may_split(int n, int g) nogil:
    # some m > 1 with m | g and m^2 | n
    cdef int m
    for m in range(2, g + 1):
        if g % m == 0 and n % (m * m) == 0:
            return True
    return False


cdef int _exponent(Field *F, int npts, int *px, int *py, int n, int qm1,
                   int a1, int a2, int a3, int a4, int a6, int *mark, int stamp) nogil:
    # multiples of a walked point have orders dividing the running lcm: mark and skip them
    cdef int ex = 1, i, k, qx, qy, rx, ry, g
    for i in range(npts):
        if mark[px[i] * F.q + py[i]] == stamp:
            continue
        k = 1
        qx = px[i]
        qy = py[i]
        mark[qx * F.q + qy] = stamp
        while _add_pts(F, a1, a2, a3, a4, a6, qx, qy, px[i], py[i], &rx, &ry):
            qx = rx
            qy = ry
            mark[qx * F.q + qy] = stamp
            k += 1
        k += 1
        g = _gcd(ex, k)
        ex = ex // g * k
        if ex == n or not _may_split(n, _gcd(n // ex, qm1)):
            return n
    return ex


cdef int *_to_c(seq) except NULL:
    cdef int i, n = len(seq)
    cdef int *out = <int *> malloc(max(n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = seq[i]
    return out


def tally(int q, int p, add, mul, neg, inv, int a1_lo, int a1_hi):
    cdef Field F
    cdef int a1, a2, a3, a4, a6, x, y, b, r, i
    cdef int a1sq, b2, b2sq, a1a3, a3sq, b4, b8_part, t1, b2b4, b6, b8, disc, rhs
    cdef int n, n2, npts, nroot, key
    cdef int two = 2 % p, four = 4 % p, nine = 9 % p
    # C remainder keeps the sign under cdivision
    cdef int m8 = (p - 8 % p) % p, m27 = (p - 27 % p) % p
    cdef int px[MAXPTS]
    cdef int py[MAXPTS]
    cdef int *cube = NULL
    cdef int *a1x = NULL
    cdef int *a2x2 = NULL
    cdef int *lin = NULL
    cdef int *base = NULL
    cdef int *nroots = NULL
    cdef int *roots = NULL
    cdef long *counts = NULL
    cdef int *mark = NULL
    cdef int stamp = 0
    cdef int tmax = 0, width, maxn2 = 0

    while (tmax + 1) * (tmax + 1) <= 4 * q:
        tmax += 1
    while (maxn2 + 1) * (maxn2 + 1) <= q + 1 + tmax:
        maxn2 += 1
    width = maxn2 + 1

    F.q = q
    F.add = _to_c(add)
    F.mul = _to_c(mul)
    F.neg = _to_c(neg)
    F.inv = _to_c(inv)
    F.sq = _to_c([mul[x * q + x] for x in range(q)])
    try:
        cube = _to_c([mul[mul[x * q + x] * q + x] for x in range(q)])
        a1x = _to_c([0] * q)
        a2x2 = _to_c([0] * q)
        lin = _to_c([0] * q)
        base = _to_c([0] * q)
        nroots = _to_c([0] * (q * q))
        roots = _to_c([0] * (2 * q * q))
        mark = _to_c([0] * (q * q))
        counts = <long *> malloc((2 * tmax + 1) * width * sizeof(long))
        if counts == NULL:
            raise MemoryError()
        for i in range((2 * tmax + 1) * width):
            counts[i] = 0
        for b in range(q):
            for y in range(q):
                r = fadd(&F, F.sq[y], fmul(&F, b, y))
                roots[2 * (b * q + r) + nroots[b * q + r]] = y
                nroots[b * q + r] += 1

        with nogil:
            for a1 in range(a1_lo, a1_hi):
                a1sq = F.sq[a1]
                for x in range(q):
                    a1x[x] = fmul(&F, a1, x)
                for a2 in range(q):
                    b2 = fadd(&F, a1sq, fmul(&F, four, a2))
                    b2sq = F.sq[b2]
                    for x in range(q):
                        a2x2[x] = fmul(&F, a2, F.sq[x])
                    for a3 in range(q):
                        for x in range(q):
                            lin[x] = fadd(&F, a1x[x], a3)
                        a1a3 = fmul(&F, a1, a3)
                        a3sq = F.sq[a3]
                        for a4 in range(q):
                            b4 = fadd(&F, fmul(&F, two, a4), a1a3)
                            for x in range(q):
                                base[x] = fadd(&F, fadd(&F, cube[x], a2x2[x]), fmul(&F, a4, x))
                            b8_part = fadd(&F, fadd(&F, F.neg[fmul(&F, a1a3, a4)],
                                                    fmul(&F, a2, a3sq)),
                                           F.neg[F.sq[a4]])
                            t1 = fmul(&F, m8, fmul(&F, F.sq[b4], b4))
                            b2b4 = fmul(&F, b2, b4)
                            for a6 in range(q):
                                b6 = fadd(&F, a3sq, fmul(&F, four, a6))
                                b8 = fadd(&F, b8_part, fmul(&F, b2, a6))
                                disc = fadd(&F, fadd(&F, F.neg[fmul(&F, b2sq, b8)], t1),
                                            fadd(&F, fmul(&F, m27, F.sq[b6]),
                                                 fmul(&F, nine, fmul(&F, b2b4, b6))))
                                if disc == 0:
                                    continue
                                npts = 0
                                for x in range(q):
                                    rhs = fadd(&F, base[x], a6)
                                    key = lin[x] * q + rhs
                                    nroot = nroots[key]
                                    for i in range(nroot):
                                        px[npts] = x
                                        py[npts] = roots[2 * key + i]
                                        npts += 1
                                n = npts + 1
                                n2 = 1
                                if _may_split(n, _gcd(n, q - 1)):
                                    stamp += 1
                                    n2 = n // _exponent(&F, npts, px, py, n, q - 1,
                                                        a1, a2, a3, a4, a6, mark, stamp)
                                counts[(q + 1 - n + tmax) * width + n2] += 1

        out = {}
        for i in range(2 * tmax + 1):
            for n2 in range(width):
                if counts[i * width + n2]:
                    out[(i - tmax, n2)] = counts[i * width + n2]
        return out
    finally:
        free(F.add); free(F.mul); free(F.neg); free(F.inv); free(F.sq)
        free(cube); free(a1x); free(a2x2); free(lin); free(base)
        free(nroots); free(roots); free(counts); free(mark)
