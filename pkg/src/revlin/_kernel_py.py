"""Pure-Python arithmetic kernels.

A scalar is a quaternion with rational coordinates, stored as a normalized
5-tuple of ints ``(a, b, c, d, den)`` meaning (a + b*i + c*j + d*k) / den
with den > 0 and gcd(a, b, c, d, den) == 1.  Real and complex scalars are
the subsets b == c == d == 0 and c == d == 0.  A matrix is a flat row-major
list of such tuples.  Everything is exact; nothing ever rounds.

Multiplication follows Hamilton's relations i^2 = j^2 = k^2 = ijk = -1,
so ij = k, jk = i, ki = j and the reversed products carry a minus sign.

``revlin._kernel_cy`` is a compiled twin of this module with the identical
interface; keep the two in sync (tests/test_kernels.py cross-checks them).
"""

from math import gcd

BACKEND_NAME = "python"

QZERO = (0, 0, 0, 0, 1)
QONE = (1, 0, 0, 0, 1)


def qnorm(a, b, c, d, den):
    """Reduce to lowest terms with a positive denominator."""
    if den < 0:
        a, b, c, d, den = -a, -b, -c, -d, -den
    g = gcd(a, b, c, d, den)
    if g > 1:
        return (a // g, b // g, c // g, d // g, den // g)
    return (a, b, c, d, den)


def qadd(x, y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xe == ye:
        return qnorm(xa + ya, xb + yb, xc + yc, xd + yd, xe)
    return qnorm(xa * ye + ya * xe, xb * ye + yb * xe,
                 xc * ye + yc * xe, xd * ye + yd * xe, xe * ye)


def qsub(x, y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xe == ye:
        return qnorm(xa - ya, xb - yb, xc - yc, xd - yd, xe)
    return qnorm(xa * ye - ya * xe, xb * ye - yb * xe,
                 xc * ye - yc * xe, xd * ye - yd * xe, xe * ye)


def qneg(x):
    a, b, c, d, den = x
    return (-a, -b, -c, -d, den)


def qconj(x):
    a, b, c, d, den = x
    return (a, -b, -c, -d, den)


def qmul(x, y):
    xa, xb, xc, xd, xe = x
    ya, yb, yc, yd, ye = y
    if xc == 0 and xd == 0 and yc == 0 and yd == 0:
        # complex * complex stays complex; real * real stays real
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


def qinv(x):
    a, b, c, d, den = x
    n2 = a * a + b * b + c * c + d * d
    if n2 == 0:
        raise ZeroDivisionError("quaternion inverse of zero")
    return qnorm(a * den, -b * den, -c * den, -d * den, n2)


def mat_mul(A, B, n, m, p):
    """Product of an n x m and an m x p flat matrix; entry order respected."""
    C = [QZERO] * (n * p)
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


def rref(M, nrows, ncols):
    """Reduced row echelon form using left row operations only.

    Left multiplication keeps elimination valid over the noncommutative
    quaternions.  Returns ``(R, pivot_cols)`` with pivots normalized to 1
    and pivot columns cleared above and below.
    """
    R = list(M)
    piv = []
    r = 0
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


def det_qi(M, n):
    """Exact determinant of an n x n matrix with complex entries (c = d = 0).

    Clears denominators row by row, then runs fraction-free Bareiss
    elimination over the Gaussian integers (exact interior divisions).
    """
    if n == 0:
        return QONE
    re = []
    im = []
    scale = 1
    for i in range(n):
        row = M[i * n:(i + 1) * n]
        L = 1
        for (_, _, _, _, den) in row:
            L = L * den // gcd(L, den)
        scale *= L
        rr = []
        ri = []
        for (a, b, _, _, den) in row:
            f = L // den
            rr.append(a * f)
            ri.append(b * f)
        re.append(rr)
        im.append(ri)
    sign = 1
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
