"""Independent verification paths.

* :func:`similarity_oracle` decides conjugacy through invariant factors
  (Smith form of xI - A), with no eigenvalue computation at all, so it also
  works when the spectrum leaves Q(i).  Over H it goes through the complex
  adjoint.
* :func:`involution_search` solves the linear reverser equation
  g A = (-A | A^{-1}) g exactly over the rational coordinates, then samples
  the solution space for involutions.  Failure proves nothing, so the
  outcome is confirmed or inconclusive, never refuted.
* :func:`decide_1x1` is the one analytic negative: in the quaternions
  x^2 = 1 forces x = +-1 (central), which settles every 1x1 case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._backend import kernel as _k
from .canonical import invariant_factors
from .classify import QuestionLevel
from .errors import ShapeMismatchError, SingularMatrixError
from .matrices import Matrix, complex_adjoint, mat_inverse, mat_mul
from .scalars import Quaternion, ScalarDomain, rational_sqrt
from .witness import Witness, certify

_COORD_UNITS = {
    ScalarDomain.R: (Quaternion(1),),
    ScalarDomain.C: (Quaternion(1), Quaternion(0, 1)),
    ScalarDomain.H: (Quaternion(1), Quaternion(0, 1), Quaternion(0, 0, 1),
                     Quaternion(0, 0, 0, 1)),
}


@dataclass(frozen=True)
class OracleReport:
    outcome: str  # "confirmed" | "inconclusive"
    evidence: Optional[Witness]
    attempts: int

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "attempts": self.attempts,
            "evidence": self.evidence.to_json_dict() if self.evidence else None,
        }


def similarity_oracle(A: Matrix, B: Matrix) -> bool:
    """Are A and B conjugate?  Decided by invariant-factor equality."""
    if A.domain is not B.domain:
        raise ShapeMismatchError("similarity oracle needs a common domain")
    if (A.rows, A.cols) != (B.rows, B.cols) or not A.is_square():
        raise ShapeMismatchError("similarity oracle needs equal square shapes")
    if A.domain is ScalarDomain.H:
        return invariant_factors(complex_adjoint(A)) == invariant_factors(complex_adjoint(B))
    return invariant_factors(A) == invariant_factors(B)


def _reverser_space(A: Matrix, B: Matrix):
    """Rational basis of {g : g A = B g}, via coordinates over the reals.

    The equation is linear over the rational coordinate space of the
    domain (1, 2 or 4 coordinates per entry), not over H itself.
    """
    n = A.rows
    units = _COORD_UNITS[A.domain]
    d = len(units)
    cols = n * n * d
    rows = n * n * d
    sys_raw = [_k.QZERO] * (rows * cols)

    def comp_raws(q: Quaternion):
        a, b, c, dd, den = q.raw
        return ((a, 0, 0, 0, den), (b, 0, 0, 0, den),
                (c, 0, 0, 0, den), (dd, 0, 0, 0, den))[:d]

    for p in range(n):
        for q_idx in range(n):
            for u_idx, u in enumerate(units):
                col = (p * n + q_idx) * d + u_idx
                # g_{p q} = u contributes u * A[q, j] to (g A)[p, j]
                for j in range(n):
                    prod = u * A[q_idx, j]
                    for comp, raw in enumerate(comp_raws(prod)):
                        row = (p * n + j) * d + comp
                        sys_raw[row * cols + col] = _k.qadd(
                            sys_raw[row * cols + col], _k.qnorm(*raw))
                # and -B[i, p] * u to (B g)[i, q]
                for i in range(n):
                    prod = B[i, p] * u
                    for comp, raw in enumerate(comp_raws(prod)):
                        row = (i * n + q_idx) * d + comp
                        sys_raw[row * cols + col] = _k.qsub(
                            sys_raw[row * cols + col], _k.qnorm(*raw))
    R, piv = _k.rref(sys_raw, rows, cols)
    pivset = set(piv)
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        coords = [_k.QZERO] * cols
        coords[f] = _k.QONE
        for r, pcol in enumerate(piv):
            e = R[r * cols + f]
            if e != _k.QZERO:
                coords[pcol] = _k.qneg(e)
        raw = []
        for e_idx in range(n * n):
            acc = Quaternion(0)
            for u_idx, u in enumerate(units):
                coef = coords[e_idx * d + u_idx]
                if coef != _k.QZERO:
                    acc = acc + Quaternion(Fraction(coef[0], coef[4])) * u
            raw.append(acc.raw)
        basis.append(Matrix._wrap(A.domain, n, n, raw))
    return basis


def _as_involution(G: Matrix) -> Optional[Matrix]:
    """G itself, or a rational rescale of G, when its square is scalar r^2 I."""
    n = G.rows
    if all(e == _k.QZERO for e in G.raw):
        return None
    sq = mat_mul(G, G)
    eye = Matrix.identity(G.domain, n)
    if sq == eye:
        return G
    diag = sq[0, 0]
    if not diag.is_real() or sq != eye * diag:
        return None
    r = rational_sqrt(diag.a)
    if r is None or r == 0:
        return None
    return G * Quaternion(r).inverse()


def involution_search(A: Matrix, mode: QuestionLevel, budget: int,
                      seed: int) -> OracleReport:
    """Sample the exact reverser space for an involution; never refutes.

    Deterministic in (seed, budget): candidates are the identity (when it
    solves the equation), each basis matrix of the reverser space, then
    seeded random small-integer combinations, each normalized through the
    scalar-square test before the involution check.
    """
    if not A.is_square():
        raise ShapeMismatchError("involution search needs a square matrix")
    if mode is QuestionLevel.GROUP:
        try:
            B = mat_inverse(A)
        except SingularMatrixError as exc:
            raise SingularMatrixError("group-level search needs an invertible "
                                      "matrix") from exc
    else:
        B = -A
    basis = _reverser_space(A, B)
    rng = random.Random(seed)
    attempts = 0

    def finish(g: Matrix):
        w = Witness(g, mode, ("reverser-space-search",))
        certify(A, w)
        return OracleReport("confirmed", w, attempts)

    if A == B:
        attempts += 1
        if attempts <= budget:
            return finish(Matrix.identity(A.domain, A.rows))
    for G in basis:
        if attempts >= budget:
            break
        attempts += 1
        g = _as_involution(G)
        if g is not None:
            return finish(g)
    while attempts < budget:
        attempts += 1
        coeffs = [rng.randint(-3, 3) for _ in basis]
        if not any(coeffs):
            continue
        G = Matrix.zero(A.domain, A.rows, A.cols)
        for c, base in zip(coeffs, basis):
            if c:
                G = G + base * c
        g = _as_involution(G)
        if g is not None:
            return finish(g)
    return OracleReport("inconclusive", None, attempts)


def decide_1x1(q: Quaternion, mode: QuestionLevel) -> bool:
    """The analytic 1x1 decision over H.

    The only involutions in the multiplicative quaternions are +-1, which
    are central: lie-level reversal forces q = 0 and group-level reversal
    forces q = q^{-1}, i.e. q in {1, -1}.
    """
    if mode is QuestionLevel.LIE:
        return q.is_zero()
    if q.is_zero():
        raise ZeroDivisionError("group-level question about a zero entry")
    return q == Quaternion(1) or q == Quaternion(-1)
