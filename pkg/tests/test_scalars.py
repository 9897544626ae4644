from fractions import Fraction

import pytest
from hypothesis import given

from revlin import (
    EigenvalueClass,
    Quaternion,
    RepresentativeOutsideQiError,
    ScalarDomain,
    class_invert,
    class_negate,
    class_representative,
    format_scalar,
    parse_scalar,
    representative_with_witness,
)
from revlin.scalars import I, J, K, ONE

from conftest import complex_scalars, nonzero_quaternions, quaternions

D = ScalarDomain


class TestProduct:
    def test_hamilton_relations(self):
        assert I * J == K
        assert J * I == -K
        assert J * K == I
        assert K * J == -I
        assert K * I == J
        assert I * K == -J
        assert I * I == J * J == K * K == Quaternion(-1)

    def test_expand_by_hand(self):
        # (1 - j) k = k - jk = k - i
        assert (ONE - J) * K == K - I

    @given(quaternions, quaternions, quaternions)
    def test_associative_and_distributive(self, x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z

    @given(quaternions, quaternions)
    def test_norm_multiplicative(self, x, y):
        assert (x * y).norm_sq() == x.norm_sq() * y.norm_sq()


class TestInverse:
    def test_examples(self):
        assert Quaternion(2).inverse() == Quaternion(Fraction(1, 2))
        assert I.inverse() == -I
        assert Quaternion(1, 0, 1).inverse() == (ONE - J) * Fraction(1, 2)

    @given(nonzero_quaternions)
    def test_two_sided(self, x):
        assert x * x.inverse() == ONE
        assert x.inverse() * x == ONE

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            Quaternion(0).inverse()

    @given(nonzero_quaternions)
    def test_square_one_only_for_signs(self, x):
        # the division ring has no involutions besides +-1
        if x != ONE and x != -ONE:
            assert x * x != ONE


class TestRepresentative:
    def test_examples(self):
        assert class_representative(K).rep == I
        assert class_representative(Quaternion(3)).rep == Quaternion(3)
        with pytest.raises(RepresentativeOutsideQiError):
            class_representative(Quaternion(1, 1, 1, 1))

    @given(quaternions)
    def test_witness_conjugates(self, q):
        try:
            rep, s = representative_with_witness(q)
        except RepresentativeOutsideQiError:
            return
        assert rep.is_complex() and rep.b >= 0
        assert s * q * s.inverse() == rep

    def test_negative_imaginary_axis(self):
        rep, s = representative_with_witness(Quaternion(5, -3))
        assert rep == Quaternion(5, 3)
        assert s * Quaternion(5, -3) * s.inverse() == rep


class TestClassInvolutions:
    def test_negate_examples(self):
        assert class_negate(EigenvalueClass(Quaternion(2), D.R)).rep == Quaternion(-2)
        assert class_negate(EigenvalueClass(Quaternion(1, 1), D.H)).rep == Quaternion(-1, 1)
        assert class_negate(EigenvalueClass(I, D.H)).rep == I

    def test_invert_examples(self):
        assert class_invert(EigenvalueClass(Quaternion(2), D.R)).rep == Quaternion(Fraction(1, 2))
        u = EigenvalueClass(Quaternion(Fraction(3, 5), Fraction(4, 5)), D.H)
        assert class_invert(u) == u
        assert class_invert(EigenvalueClass(Quaternion(1, 1), D.H)).rep \
            == Quaternion(Fraction(1, 2), Fraction(1, 2))

    @given(complex_scalars)
    def test_involutions_twice(self, rep):
        for domain in (D.C, D.H, D.R):
            if domain is not D.C and rep.b < 0:
                continue
            if domain is D.R and rep.b != 0:
                continue  # R classes live on the axis or come from pair blocks
            cls = EigenvalueClass(rep, domain)
            assert class_negate(class_negate(cls)) == cls
            if not rep.is_zero():
                assert class_invert(class_invert(cls)) == cls

    def test_pair_class_involutions_over_r(self):
        cls = EigenvalueClass(Quaternion(2, 1), D.R)
        assert class_negate(cls).rep == Quaternion(-2, 1)
        assert class_invert(cls).rep == Quaternion(Fraction(2, 5), Fraction(1, 5))

    def test_invert_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            class_invert(EigenvalueClass(Quaternion(0), D.C))


class TestGrammar:
    @pytest.mark.parametrize("text,parts", [
        ("3", (3, 0, 0, 0)),
        ("-1/2", (Fraction(-1, 2), 0, 0, 0)),
        ("1+2i", (1, 2, 0, 0)),
        ("1-1/2j+3k", (1, 0, Fraction(-1, 2), 3)),
        ("i", (0, 1, 0, 0)),
        ("-k", (0, 0, 0, -1)),
        (" 1 - 1/2 j + 3 k ", (1, 0, Fraction(-1, 2), 3)),
    ])
    def test_parse(self, text, parts):
        q = parse_scalar(text)
        assert (q.a, q.b, q.c, q.d) == tuple(Fraction(p) for p in parts)

    @pytest.mark.parametrize("bad", ["", "1++2", "x", "1 2", "2/", "ii"])
    def test_parse_rejects(self, bad):
        from revlin import ParseError
        with pytest.raises(ParseError):
            parse_scalar(bad)

    @given(quaternions)
    def test_round_trip(self, q):
        assert parse_scalar(format_scalar(q)) == q


def test_domain_constraints_on_classes():
    from revlin import DomainMismatchError
    with pytest.raises(DomainMismatchError):
        EigenvalueClass(J, D.H)  # representative must be complex
    with pytest.raises(DomainMismatchError):
        EigenvalueClass(Quaternion(0, -1), D.H)  # Im >= 0 over H
