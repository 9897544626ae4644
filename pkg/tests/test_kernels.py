"""Kernel twins must agree, and both must match independent references."""

import random
from fractions import Fraction

import pytest

from revlin import _kernel_py

try:
    from revlin import _kernel_cy
    BACKENDS = [_kernel_py, _kernel_cy]
except ImportError:  # compiled kernel is optional
    _kernel_cy = None
    BACKENDS = [_kernel_py]


def _rand_raw(rng, span=8, maxden=6):
    return _kernel_py.qnorm(rng.randint(-span, span), rng.randint(-span, span),
                            rng.randint(-span, span), rng.randint(-span, span),
                            rng.randint(1, maxden))


def _rand_complex_raw(rng, span=6, maxden=4):
    return _kernel_py.qnorm(rng.randint(-span, span), rng.randint(-span, span),
                            0, 0, rng.randint(1, maxden))


def _to_fracs(x):
    a, b, c, d, den = x
    return tuple(Fraction(v, den) for v in (a, b, c, d))


def _hamilton_reference(x, y):
    # independent quaternion product straight from the relation table
    a1, b1, c1, d1 = _to_fracs(x)
    a2, b2, c2, d2 = _to_fracs(y)
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _cofactor_det(rows):
    # independent complex determinant: Laplace expansion over Fraction pairs
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = (Fraction(0), Fraction(0))
    for j in range(n):
        re, im = rows[0][j]
        if re == 0 and im == 0:
            continue
        minor = [[row[t] for t in range(n) if t != j] for row in rows[1:]]
        mre, mim = _cofactor_det(minor)
        term = (re * mre - im * mim, re * mim + im * mre)
        if j % 2:
            term = (-term[0], -term[1])
        total = (total[0] + term[0], total[1] + term[1])
    return total


@pytest.mark.parametrize("k", BACKENDS, ids=lambda m: m.BACKEND_NAME)
class TestKernel:
    def test_qnorm_canonicalizes(self, k):
        assert k.qnorm(2, 4, -2, 0, 6) == (1, 2, -1, 0, 3)
        assert k.qnorm(-1, 0, 0, 0, -2) == (1, 0, 0, 0, 2)
        assert k.qnorm(0, 0, 0, 0, 7) == k.QZERO

    def test_qmul_matches_reference(self, k):
        rng = random.Random(11)
        for _ in range(300):
            x, y = _rand_raw(rng), _rand_raw(rng)
            got = k.qmul(x, y)
            assert _to_fracs(got) == _hamilton_reference(x, y)

    def test_qinv_roundtrip(self, k):
        rng = random.Random(12)
        for _ in range(200):
            x = _rand_raw(rng)
            if x == k.QZERO:
                continue
            assert k.qmul(x, k.qinv(x)) == k.QONE
            assert k.qmul(k.qinv(x), x) == k.QONE
        with pytest.raises(ZeroDivisionError):
            k.qinv(k.QZERO)

    def test_det_matches_cofactor_expansion(self, k):
        rng = random.Random(13)
        for _ in range(60):
            n = rng.randint(1, 4)
            raw = [_rand_complex_raw(rng) for _ in range(n * n)]
            got = k.det_qi(list(raw), n)
            rows = [[(Fraction(e[0], e[4]), Fraction(e[1], e[4]))
                     for e in raw[i * n:(i + 1) * n]] for i in range(n)]
            re, im = _cofactor_det(rows)
            assert _to_fracs(got)[:2] == (re, im)

    def test_rref_postconditions(self, k):
        rng = random.Random(14)
        for _ in range(60):
            nr, nc = rng.randint(1, 5), rng.randint(1, 5)
            raw = [_rand_raw(rng, span=3) for _ in range(nr * nc)]
            R, piv = k.rref(list(raw), nr, nc)
            for r, p in enumerate(piv):
                assert R[r * nc + p] == k.QONE
                for i in range(nr):
                    if i != r:
                        assert R[i * nc + p] == k.QZERO
            # rows beyond the rank are zero
            for i in range(len(piv), nr):
                assert all(R[i * nc + j] == k.QZERO for j in range(nc))


@pytest.mark.skipif(_kernel_cy is None, reason="compiled kernel not built")
def test_backends_agree_everywhere():
    rng = random.Random(15)
    for _ in range(400):
        x, y = _rand_raw(rng), _rand_raw(rng)
        assert _kernel_py.qadd(x, y) == _kernel_cy.qadd(x, y)
        assert _kernel_py.qsub(x, y) == _kernel_cy.qsub(x, y)
        assert _kernel_py.qmul(x, y) == _kernel_cy.qmul(x, y)
    for _ in range(40):
        n = rng.randint(1, 6)
        A = [_rand_raw(rng, span=3) for _ in range(n * n)]
        B = [_rand_raw(rng, span=3) for _ in range(n * n)]
        assert (_kernel_py.mat_mul(list(A), list(B), n, n, n)
                == _kernel_cy.mat_mul(list(A), list(B), n, n, n))
        assert tuple(_kernel_py.rref(list(A), n, n)) == tuple(_kernel_cy.rref(list(A), n, n))
        Ac = [(a, b, 0, 0, e) for (a, b, _, _, e) in A]
        assert _kernel_py.det_qi(list(Ac), n) == _kernel_cy.det_qi(list(Ac), n)


def test_selected_backend_is_exposed():
    from revlin import backend_name
    assert backend_name() in ("python", "cython")
