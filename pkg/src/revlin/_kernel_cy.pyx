# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of revlin._kernel_py; identical interface and semantics.

Scalars stay arbitrary-precision Python ints inside 5-tuples, so exactness
is untouched; the win is compiled dispatch in the O(n^3) loops.  Keep this
file in sync with _kernel_py.py (tests/test_kernels.py cross-checks).
"""

from math import gcd

BACKEND_NAME = "cython"

QZERO = (0, 0, 0, 0, 1)
QONE = (1, 0, 0, 0, 1)


cpdef tuple qnorm(a, b, c, d, den):
    if den < 0:
        a, b, c, d, den = -a, -b, -c, -d, -den
    g = gcd(a, b, c, d, den)
    if g > 1:
        return (a // g, b // g, c // g, d // g, den // g)
    return (a, b, c, d, den)


cpdef tuple qadd(tuple x, tuple y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xe == ye:
        return qnorm(xa + ya, xb + yb, xc + yc, xd + yd, xe)
    return qnorm(xa * ye + ya * xe, xb * ye + yb * xe,
                 xc * ye + yc * xe, xd * ye + yd * xe, xe * ye)


cpdef tuple qsub(tuple x, tuple y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xe == ye:
        return qnorm(xa - ya, xb - yb, xc - yc, xd - yd, xe)
    return qnorm(xa * ye - ya * xe, xb * ye - yb * xe,
                 xc * ye - yc * xe, xd * ye - yd * xe, xe * ye)


cpdef tuple qneg(tuple x):
    a, b, c, d, den = x
    return (-a, -b, -c, -d, den)


cpdef tuple qconj(tuple x):
    a, b, c, d, den = x
    return (a, -b, -c, -d, den)


cpdef tuple qmul(tuple x, tuple y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xc == 0 and xd == 0 and yc == 0 and yd == 0:
        if xb == 0 and yb == 0:
            if xa == 0 or ya == 0:
                return QZERO
            return qnorm(xa * ya, 0, 0, 0, xe * ye)
        return qnorm(xa * ya - xb * yb, xa * yb + xb * ya, 0, 0, xe * ye)
    return qnorm(
        xa * ya - xb * yb - xc * yc - xd * yd,
        xa * yb + xb * ya + xc * yd - xd * yc,
        xa * yc - xb * yd + xc * ya + xd * yb,
        xa * yd + xb * yc - xc * yb + xd * ya,
        xe * ye,
    )


cpdef tuple qinv(tuple x):
    a, b, c, d, den = x
    n2 = a * a + b * b + c * c + d * d
    if n2 == 0:
        raise ZeroDivisionError("quaternion inverse of zero")
    return qnorm(a * den, -b * den, -c * den, -d * den, n2)


cpdef list mat_mul(list A, list B, Py_ssize_t n, Py_ssize_t m, Py_ssize_t p):
    cdef Py_ssize_t i, t, j, im, ip, tp
    cdef list C = [QZERO] * (n * p)
    for i in range(n):
        im = i * m
        ip = i * p
        for t in range(m):
            a = A[im + t]
            if a == QZERO:
                continue
            tp = t * p
            for j in range(p):
                b = B[tp + j]
                if b == QZERO:
                    continue
                C[ip + j] = qadd(C[ip + j], qmul(a, b))
    return C


cpdef tuple rref(M, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef list R = list(M)
    cdef list piv = []
    cdef Py_ssize_t r = 0, c, i, j, prow
    for c in range(ncols):
        prow = -1
        for i in range(r, nrows):
            if R[i * ncols + c] != QZERO:
                prow = i
                break
        if prow < 0:
            continue
        if prow != r:
            for j in range(c, ncols):
                R[r * ncols + j], R[prow * ncols + j] = \
                    R[prow * ncols + j], R[r * ncols + j]
        pv = R[r * ncols + c]
        if pv != QONE:
            inv = qinv(pv)
            R[r * ncols + c] = QONE
            for j in range(c + 1, ncols):
                e = R[r * ncols + j]
                if e != QZERO:
                    R[r * ncols + j] = qmul(inv, e)
        for i in range(nrows):
            if i == r:
                continue
            f = R[i * ncols + c]
            if f == QZERO:
                continue
            R[i * ncols + c] = QZERO
            for j in range(c + 1, ncols):
                e = R[r * ncols + j]
                if e != QZERO:
                    R[i * ncols + j] = qsub(R[i * ncols + j], qmul(f, e))
        piv.append(c)
        r += 1
        if r == nrows:
            break
    return R, piv


cpdef tuple det_qi(M, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, sw
    cdef int sign = 1
    cdef bint trivial
    if n == 0:
        return QONE
    cdef list re = [], im = []
    scale = 1
    for i in range(n):
        row = M[i * n:(i + 1) * n]
        L = 1
        for entry in row:
            den = entry[4]
            L = L * den // gcd(L, den)
        scale *= L
        rr = []
        ri = []
        for entry in row:
            f = L // entry[4]
            rr.append(entry[0] * f)
            ri.append(entry[1] * f)
        re.append(rr)
        im.append(ri)
    pr, pi = 1, 0
    for k in range(n - 1):
        if re[k][k] == 0 and im[k][k] == 0:
            sw = -1
            for i in range(k + 1, n):
                if re[i][k] != 0 or im[i][k] != 0:
                    sw = i
                    break
            if sw < 0:
                return QZERO
            re[k], re[sw] = re[sw], re[k]
            im[k], im[sw] = im[sw], im[k]
            sign = -sign
        akr = re[k][k]
        aki = im[k][k]
        pn = pr * pr + pi * pi
        trivial = pn == 1 and pr == 1
        rek = re[k]
        imk = im[k]
        for i in range(k + 1, n):
            rei = re[i]
            imi = im[i]
            air = rei[k]
            aii = imi[k]
            for j in range(k + 1, n):
                tr = rei[j] * akr - imi[j] * aki - air * rek[j] + aii * imk[j]
                ti = rei[j] * aki + imi[j] * akr - air * imk[j] - aii * rek[j]
                if trivial:
                    rei[j] = tr
                    imi[j] = ti
                else:
                    rei[j] = (tr * pr + ti * pi) // pn
                    imi[j] = (ti * pr - tr * pi) // pn
            rei[k] = 0
            imi[k] = 0
        pr, pi = akr, aki
    dr = re[n - 1][n - 1]
    di = im[n - 1][n - 1]
    if sign < 0:
        dr, di = -dr, -di
    return qnorm(dr, di, 0, 0, scale)
