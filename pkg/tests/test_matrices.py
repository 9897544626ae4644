import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from revlin import (
    DomainMismatchError,
    Matrix,
    Permutation,
    ScalarDomain,
    ShapeMismatchError,
    SingularMatrixError,
    Quaternion,
    block_compose,
    block_permutation,
    cayley,
    complex_adjoint,
    exp_nilpotent,
    mat_inverse,
    mat_mul,
    permute_conjugate,
    realify,
)
from revlin.corpus import random_invertible
from revlin.scalars import I, J, K

from conftest import complex_scalars

D = ScalarDomain


def _random_matrix(domain, rows, cols, rng, span=3):
    pool = {
        D.R: lambda: Quaternion(rng.randint(-span, span)),
        D.C: lambda: Quaternion(rng.randint(-span, span), rng.randint(-span, span)),
        D.H: lambda: Quaternion(rng.randint(-span, span), rng.randint(-span, span),
                                rng.randint(-span, span), rng.randint(-span, span)),
    }[domain]
    return Matrix(domain, rows, cols, [pool() for _ in range(rows * cols)])


class TestBasics:
    def test_domain_tag_enforced(self):
        with pytest.raises(DomainMismatchError):
            Matrix(D.C, 1, 1, [J])
        with pytest.raises(DomainMismatchError):
            Matrix(D.R, 1, 1, [I])

    def test_shape_checks(self):
        with pytest.raises(ShapeMismatchError):
            Matrix(D.R, 2, 2, [1, 2, 3])
        A = Matrix.from_rows(D.R, [[1, 2]])
        with pytest.raises(ShapeMismatchError):
            mat_mul(A, A)
        with pytest.raises(DomainMismatchError):
            mat_mul(A, Matrix.from_rows(D.C, [[1], [2]]))

    def test_identity_multiplication(self, rng):
        A = _random_matrix(D.H, 3, 3, rng)
        assert mat_mul(Matrix.identity(D.H, 3), A) == A
        assert mat_mul(A, Matrix.identity(D.H, 3)) == A

    def test_noncommutative_order(self):
        A = Matrix.diagonal(D.H, [J, J])
        B = Matrix.diagonal(D.H, [I, I])
        assert mat_mul(A, B) == Matrix.diagonal(D.H, [-K, -K])
        assert mat_mul(B, A) == Matrix.diagonal(D.H, [K, K])

    def test_nilpotent_square(self):
        N = Matrix.from_rows(D.C, [[0, 1], [0, 0]])
        assert mat_mul(N, N) == Matrix.zero(D.C, 2, 2)


class TestInverse:
    def test_examples(self):
        assert mat_inverse(Matrix.identity(D.H, 3)) == Matrix.identity(D.H, 3)
        assert mat_inverse(Matrix.from_rows(D.C, [[1, 1], [0, 1]])) \
            == Matrix.from_rows(D.C, [[1, -1], [0, 1]])
        with pytest.raises(SingularMatrixError):
            mat_inverse(Matrix.from_rows(D.C, [[0, 1], [0, 0]]))

    def test_round_trip_all_domains(self, rng):
        for domain in (D.R, D.C, D.H):
            for _ in range(15):
                n = rng.randint(1, 5)
                A = random_invertible(domain, n, rng)
                eye = Matrix.identity(domain, n)
                assert mat_mul(A, mat_inverse(A)) == eye
                assert mat_mul(mat_inverse(A), A) == eye


class TestRealify:
    def test_entry_shape(self):
        assert realify(Matrix(D.C, 1, 1, [I])) == Matrix.from_rows(D.R, [[0, 1], [-1, 0]])
        assert realify(Matrix.identity(D.C, 1)) == Matrix.identity(D.R, 2)

    def test_jordan_block_becomes_real_pair_block(self):
        Ji2 = Matrix.from_rows(D.C, [[I, 1], [0, I]])
        expected = Matrix.from_rows(D.R, [
            [0, 1, 1, 0],
            [-1, 0, 0, 1],
            [0, 0, 0, 1],
            [0, 0, -1, 0],
        ])
        assert realify(Ji2) == expected

    def test_rejects_wrong_domain(self):
        with pytest.raises(DomainMismatchError):
            realify(Matrix.identity(D.R, 2))

    def test_ring_homomorphism(self, rng):
        for _ in range(25):
            n = rng.randint(1, 4)
            A = _random_matrix(D.C, n, n, rng)
            B = _random_matrix(D.C, n, n, rng)
            assert realify(A + B) == realify(A) + realify(B)
            assert realify(mat_mul(A, B)) == mat_mul(realify(A), realify(B))
        assert realify(Matrix.identity(D.C, 3)) == Matrix.identity(D.R, 6)


class TestComplexAdjoint:
    def test_examples(self):
        assert complex_adjoint(Matrix(D.H, 1, 1, [J])) == Matrix.from_rows(D.C, [[0, 1], [-1, 0]])
        assert complex_adjoint(Matrix(D.H, 1, 1, [I])) == Matrix.diagonal(D.C, [I, -I])
        assert complex_adjoint(Matrix.identity(D.H, 1)) == Matrix.identity(D.C, 2)

    def test_ring_homomorphism(self, rng):
        for _ in range(25):
            n = rng.randint(1, 4)
            A = _random_matrix(D.H, n, n, rng)
            B = _random_matrix(D.H, n, n, rng)
            assert complex_adjoint(A + B) == complex_adjoint(A) + complex_adjoint(B)
            assert complex_adjoint(mat_mul(A, B)) \
                == mat_mul(complex_adjoint(A), complex_adjoint(B))

    def test_j_symmetry(self, rng):
        # J_n chi(A) = conj(chi(A)) J_n with J_n = [[0, I], [-I, 0]]
        for _ in range(15):
            n = rng.randint(1, 4)
            A = _random_matrix(D.H, n, n, rng)
            chi = complex_adjoint(A)
            eye = Matrix.identity(D.C, n)
            jn = block_compose([eye, -eye], "antidiagonal")
            assert mat_mul(jn, chi) == mat_mul(chi.conjugate_entries(), jn)


class TestExpAndCayley:
    def test_cayley_examples(self):
        assert cayley(Matrix.zero(D.R, 3, 3)) == Matrix.identity(D.R, 3)
        N = Matrix.from_rows(D.R, [[0, 1], [0, 0]])
        assert cayley(N) == Matrix.from_rows(D.R, [[1, 2], [0, 1]])
        with pytest.raises(SingularMatrixError):
            cayley(Matrix.identity(D.R, 2))

    def test_cayley_negation_is_inversion(self, rng):
        for domain in (D.R, D.C, D.H):
            for _ in range(10):
                n = rng.randint(1, 4)
                X = _random_matrix(domain, n, n, rng, span=1)
                try:
                    c, cneg = cayley(X), cayley(-X)
                except SingularMatrixError:
                    continue
                assert mat_mul(cneg, c) == Matrix.identity(domain, n)

    def test_exp_identity_on_nilpotents(self, rng):
        # realify(exp X) == exp(realify X), both as finite sums
        for _ in range(20):
            n = rng.randint(1, 5)
            entries = [[Quaternion(rng.randint(-2, 2), rng.randint(-2, 2))
                        if j > i else Quaternion(0) for j in range(n)]
                       for i in range(n)]
            X = Matrix.from_rows(D.C, entries)
            assert realify(exp_nilpotent(X)) == exp_nilpotent(realify(X))

    def test_exp_rejects_non_nilpotent(self):
        with pytest.raises(ValueError):
            exp_nilpotent(Matrix.identity(D.C, 2))

    def test_cayley_commutes_with_realify(self, rng):
        for _ in range(15):
            n = rng.randint(1, 4)
            X = _random_matrix(D.C, n, n, rng, span=1)
            try:
                lhs = realify(cayley(X))
            except SingularMatrixError:
                continue
            assert lhs == cayley(realify(X))


class TestBlockOps:
    def test_block_compose_diagonal(self):
        one = Matrix(D.C, 1, 1, [1])
        two = Matrix(D.C, 1, 1, [2])
        assert block_compose([one, two]) == Matrix.diagonal(D.C, [1, 2])

    def test_block_compose_antidiagonal(self):
        t = Matrix(D.C, 1, 1, [1])
        assert block_compose([t, t], "antidiagonal") == Matrix.from_rows(D.C, [[0, 1], [1, 0]])
        with pytest.raises(ShapeMismatchError):
            block_compose([t, t, t], "antidiagonal")

    def test_antidiagonal_squares_to_identity(self, rng):
        for _ in range(10):
            n = rng.randint(1, 4)
            X = random_invertible(D.H, n, rng)
            g = block_compose([X, mat_inverse(X)], "antidiagonal")
            assert mat_mul(g, g) == Matrix.identity(D.H, 2 * n)

    def test_permute_conjugate(self):
        A = Matrix.diagonal(D.C, [1, 2])
        same = permute_conjugate(A, Permutation((0, 1)))
        assert same == A
        swapped = permute_conjugate(A, block_permutation([1, 1], [1, 0]))
        assert swapped == Matrix.diagonal(D.C, [2, 1])
        twoblocks = Matrix.diagonal(D.C, [2, Fraction(1, 2)])
        assert permute_conjugate(twoblocks, block_permutation([1, 1], [1, 0])) \
            == Matrix.diagonal(D.C, [Fraction(1, 2), 2])

    def test_permutation_validation(self):
        with pytest.raises(ShapeMismatchError):
            Permutation((0, 0))


class TestJson:
    @given(st.lists(complex_scalars, min_size=1, max_size=6))
    @settings(max_examples=40)
    def test_round_trip(self, entries):
        rows = len(entries)
        m = Matrix(D.C, rows, 1, entries)
        assert Matrix.from_json_dict(m.to_json_dict()) == m

    def test_example_documents(self):
        doc = {"domain": "H", "rows": 1, "cols": 1, "entries": [["i"]]}
        assert Matrix.from_json_dict(doc) == Matrix(D.H, 1, 1, [I])
        from revlin import ParseError
        with pytest.raises(ParseError):
            Matrix.from_json_dict({"domain": "C", "rows": 1, "cols": 2, "entries": [["1"]]})
