"""Exact scalars: rationals, Gaussian rationals and rational quaternions.

``Rational`` is the stdlib ``fractions.Fraction``.  ``Quaternion`` holds a
quaternion with rational coordinates in canonical reduced form; the real
and complex numbers are the subsets with b = c = d = 0 and c = d = 0, so a
single scalar type (under a :class:`ScalarDomain` tag) serves all three
division rings and every matrix kernel is written once.

Eigenvalue similarity classes over the quaternions are represented by the
unique complex number with non-negative imaginary part; see
:func:`class_representative`.  The two class involutions used by the
classifiers are :func:`class_negate` and :func:`class_invert`.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt, lcm

from ._backend import kernel as _k
from .errors import DomainMismatchError, ParseError, RepresentativeOutsideQiError

Rational = Fraction


class ScalarDomain(str, Enum):
    """The three division rings a matrix can live over."""

    R = "R"
    C = "C"
    H = "H"

    def __repr__(self):
        return f"ScalarDomain.{self.name}"


def _raw_from_fractions(fa: Fraction, fb: Fraction, fc: Fraction, fd: Fraction):
    den = lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
    return _k.qnorm(
        fa.numerator * (den // fa.denominator),
        fb.numerator * (den // fb.denominator),
        fc.numerator * (den // fc.denominator),
        fd.numerator * (den // fd.denominator),
        den,
    )


class Quaternion:
    """A quaternion a + b i + c j + d k with rational coordinates.

    Immutable and kept in canonical reduced form, so ``==`` and ``hash``
    compare exact values.  Products follow Hamilton's relations
    i^2 = j^2 = k^2 = ijk = -1 (ij = k, jk = i, ki = j); multiplication is
    not commutative, so keep operand order in mind.
    """

    __slots__ = ("_raw",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self._raw = _raw_from_fractions(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @classmethod
    def _wrap(cls, raw):
        q = object.__new__(cls)
        q._raw = raw
        return q

    @property
    def raw(self):
        """Normalized (a, b, c, d, den) integer tuple; internal representation."""
        return self._raw

    @property
    def a(self) -> Fraction:
        return Fraction(self._raw[0], self._raw[4])

    @property
    def b(self) -> Fraction:
        return Fraction(self._raw[1], self._raw[4])

    @property
    def c(self) -> Fraction:
        return Fraction(self._raw[2], self._raw[4])

    @property
    def d(self) -> Fraction:
        return Fraction(self._raw[3], self._raw[4])

    def is_zero(self) -> bool:
        return self._raw == _k.QZERO

    def is_real(self) -> bool:
        return self._raw[1] == 0 and self._raw[2] == 0 and self._raw[3] == 0

    def is_complex(self) -> bool:
        return self._raw[2] == 0 and self._raw[3] == 0

    def in_domain(self, domain: ScalarDomain) -> bool:
        if domain is ScalarDomain.R:
            return self.is_real()
        if domain is ScalarDomain.C:
            return self.is_complex()
        return True

    def conjugate(self) -> "Quaternion":
        return Quaternion._wrap(_k.qconj(self._raw))

    def norm_sq(self) -> Fraction:
        a, b, c, d, den = self._raw
        return Fraction(a * a + b * b + c * c + d * d, den * den)

    def inverse(self) -> "Quaternion":
        return Quaternion._wrap(_k.qinv(self._raw))

    @staticmethod
    def _coerce(other):
        if isinstance(other, Quaternion):
            return other
        if isinstance(other, (int, Fraction)):
            return Quaternion(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qadd(self._raw, o._raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qsub(self._raw, o._raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qsub(o._raw, self._raw))

    def __neg__(self):
        return Quaternion._wrap(_k.qneg(self._raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qmul(self._raw, o._raw))

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qmul(o._raw, self._raw))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._wrap(_k.qmul(self._raw, _k.qinv(o._raw)))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = _k.QONE
        base = self._raw
        while n:
            if n & 1:
                out = _k.qmul(out, base)
            base = _k.qmul(base, base)
            n >>= 1
        return Quaternion._wrap(out)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._raw == o._raw

    def __hash__(self):
        return hash(self._raw)

    def __bool__(self):
        return self._raw != _k.QZERO

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Quaternion.parse({format_scalar(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        return parse_scalar(text)


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)

_TERM = _re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk])?")


def parse_scalar(text: str) -> Quaternion:
    """Parse the scalar grammar: e.g. "3", "-1/2", "1+2i", "1-1/2j+3k".

    Whitespace-insensitive; each sign binds to the following term; a bare
    unit letter means coefficient 1.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty scalar")
    coeffs = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"bad scalar syntax at {s[pos:]!r} in {text!r}")
        sign, num, unit = m.groups()
        if not num and not unit:
            raise ParseError(f"bad scalar syntax at {s[pos:]!r} in {text!r}")
        if not first and not sign:
            raise ParseError(f"missing sign before {s[pos:]!r} in {text!r}")
        value = Fraction(num) if num else Fraction(1)
        if sign == "-":
            value = -value
        coeffs[unit or ""] += value
        pos = m.end()
        first = False
    return Quaternion(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])


def format_scalar(q: Quaternion) -> str:
    """Inverse of :func:`parse_scalar`; canonical, round-trips exactly."""
    parts = []
    for coeff, unit in ((q.a, ""), (q.b, "i"), (q.c, "j"), (q.d, "k")):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else ("+" if parts else "")
        mag = -coeff if coeff < 0 else coeff
        if unit and mag == 1:
            parts.append(f"{sign}{unit}")
        else:
            parts.append(f"{sign}{mag}{unit}")
    return "".join(parts) if parts else "0"


@dataclass(frozen=True)
class EigenvalueClass:
    """An eigenvalue similarity class with its canonical representative.

    For H the representative is the unique complex number in the class with
    non-negative imaginary part.  For R a representative with positive
    imaginary part stands for a conjugate pair of complex eigenvalues of a
    real matrix.  For C it is the eigenvalue itself.
    """

    rep: Quaternion
    domain: ScalarDomain

    def __post_init__(self):
        if not self.rep.is_complex():
            raise DomainMismatchError(f"class representative must be complex: {self.rep}")
        if self.domain in (ScalarDomain.R, ScalarDomain.H) and self.rep.b < 0:
            raise DomainMismatchError(
                f"domain {self.domain.value} representative needs Im >= 0: {self.rep}")


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None."""
    if x < 0:
        return None
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        return None
    return Fraction(rn, rd)


def representative_with_witness(q: Quaternion) -> tuple[Quaternion, Quaternion]:
    """Canonical complex representative of [q] plus a conjugator witness.

    Returns (rep, s) with s * q * s^{-1} == rep exactly.  The representative
    is a + sqrt(b^2 + c^2 + d^2) i, which exists in Q(i) iff that square
    root is rational; otherwise RepresentativeOutsideQiError is raised.
    """
    r2 = q.b * q.b + q.c * q.c + q.d * q.d
    r = rational_sqrt(r2)
    if r is None:
        raise RepresentativeOutsideQiError(
            f"imaginary norm^2 {r2} of {q} is not a rational square")
    rep = Quaternion(q.a, r)
    if r == 0:
        return rep, ONE
    if q.c == 0 and q.d == 0 and q.b == -r:
        # q is a - r i: rotate by j, which conjugates i to -i
        return rep, J
    # s = r i + Im(q) conjugates the imaginary part onto the i axis
    s = Quaternion(0, r + q.b, q.c, q.d)
    return rep, s


def class_representative(q: Quaternion) -> EigenvalueClass:
    """Quaternionic eigenvalue class of q (unique complex rep, Im >= 0)."""
    rep, _ = representative_with_witness(q)
    return EigenvalueClass(rep, ScalarDomain.H)


def class_negate(cls: EigenvalueClass) -> EigenvalueClass:
    """The class of the negated eigenvalue; an involution.

    Over C this is literally -lam.  Over R and H the canonical orientation
    (Im >= 0) is restored, so x + iy maps to -x + iy; fixed points are
    exactly the purely imaginary representatives.
    """
    rep = cls.rep
    if cls.domain is ScalarDomain.C:
        return EigenvalueClass(-rep, cls.domain)
    return EigenvalueClass(Quaternion(-rep.a, rep.b), cls.domain)


def class_invert(cls: EigenvalueClass) -> EigenvalueClass:
    """The class of the inverted eigenvalue; an involution on nonzero classes.

    Over C this is lam^{-1}.  Over R and H the representative maps to
    lam / |lam|^2, keeping Im >= 0; fixed points are exactly |lam| = 1.
    """
    rep = cls.rep
    if rep.is_zero():
        raise ZeroDivisionError("cannot invert the zero eigenvalue class")
    if cls.domain is ScalarDomain.C:
        return EigenvalueClass(rep.inverse(), cls.domain)
    n2 = rep.norm_sq()
    return EigenvalueClass(Quaternion(rep.a / n2, rep.b / n2), cls.domain)
