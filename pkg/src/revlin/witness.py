"""Constructive involution witnesses, certified by exact identities.

Lie mode builds g with g^2 = I and g X g^{-1} = -X; group mode builds g
with g^2 = I and g A g^{-1} = A^{-1}.  Each admissible block or pair of
blocks has a closed-form or Cayley-based reverser:

* nilpotent blocks and purely-rotational real blocks take alternating sign
  diagonals;
* mirrored pairs take antidiagonal involutions [[0, t], [t, 0]] built from
  an alternating-sign t (with a factor j and a sign twist over H);
* unit eigenvalue and unit-modulus blocks take g0-conjugates of exact
  Cayley companions: g0 X g0^{-1} = -X forces
  g0 cayley(X) g0^{-1} = cayley(X)^{-1}, and a similarity conjugator moves
  the relation onto the Jordan block;
* reciprocal pairs solve the single conjugacy X B2 X^{-1} = B1^{-1} and
  use [[0, X], [X^{-1}, 0]], whose square is always the identity.

Every path ends in :func:`certify`; an uncertified witness never escapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canonical import Decomposition, JordanBlock, assemble, build_block, similarity_conjugator
from .classify import PairingPlan, QuestionLevel
from .errors import (
    CertificationFailedError,
    DomainMismatchError,
    NotApplicableError,
    ParseError,
    PlanMismatchError,
    ShapeMismatchError,
)
from .matrices import (
    Matrix,
    block_compose,
    block_permutation,
    cayley,
    mat_inverse,
    mat_mul,
    permute_conjugate,
)
from .scalars import EigenvalueClass, Quaternion, ScalarDomain, class_invert, class_negate

_J = Quaternion(0, 0, 1)


@dataclass(frozen=True)
class Witness:
    """An exact involution g reversing a matrix at the given level."""

    g: Matrix
    mode: QuestionLevel
    provenance: tuple

    def __post_init__(self):
        if not self.g.is_square():
            raise ShapeMismatchError("a witness must be square")
        if mat_mul(self.g, self.g) != Matrix.identity(self.g.domain, self.g.rows):
            raise CertificationFailedError("g*g == I", "witness is not an involution")

    def to_json_dict(self) -> dict:
        return {"mode": self.mode.value, "g": self.g.to_json_dict(),
                "provenance": list(self.provenance)}

    @classmethod
    def from_json_dict(cls, doc) -> "Witness":
        try:
            return cls(Matrix.from_json_dict(doc["g"]), QuestionLevel(doc["mode"]),
                       tuple(doc["provenance"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed witness document: {exc}") from exc


@dataclass(frozen=True)
class Certificate:
    """Record that both witness identities were checked by exact equality."""

    witness: Witness
    identity_checked: bool
    involution_checked: bool

    def to_json_dict(self) -> dict:
        return {"witness": self.witness.to_json_dict(),
                "identityChecked": self.identity_checked,
                "involutionChecked": self.involution_checked}


def _alternating_diag(domain, m: int) -> Matrix:
    return Matrix.diagonal(domain, [Quaternion((-1) ** t) for t in range(m)])


def _paired_alternating_diag(domain, two_l: int) -> Matrix:
    # diag(I_{1,1}, -I_{1,1}, I_{1,1}, ...): sign (-1)^(t//2 + t%2)
    return Matrix.diagonal(domain, [Quaternion((-1) ** (t // 2 + t % 2))
                                    for t in range(two_l)])


def _quaternion_alt_j(s: int) -> Matrix:
    return Matrix.diagonal(ScalarDomain.H, [_J * ((-1) ** t) for t in range(s)])


def lie_singleton_reverser(block: JordanBlock, domain) -> Matrix:
    """Involution g with g B g^{-1} = -B for an admissible single block.

    Admissible: the nilpotent block J(0, m) over any domain, or the real
    rotation block of a purely imaginary class pair (0 +- i nu).
    """
    domain = ScalarDomain(domain)
    lam = block.eigenvalue
    if block.real_complex_pair:
        if domain is not ScalarDomain.R or lam.a != 0:
            raise NotApplicableError(f"no singleton reverser for pair block {block}")
        return _paired_alternating_diag(domain, 2 * block.size)
    if not lam.is_zero():
        raise NotApplicableError(f"no lie singleton reverser for eigenvalue {lam}")
    return _alternating_diag(domain, block.size)


def lie_pair_reverser(b1: JordanBlock, b2: JordanBlock, domain) -> Matrix:
    """Antidiagonal involution reversing build(b1) (+) build(b2), lie level."""
    domain = ScalarDomain(domain)
    if b1.size != b2.size or b1.real_complex_pair != b2.real_complex_pair:
        raise NotApplicableError("pair blocks must share size and shape")
    lam = b1.eigenvalue
    if lam.is_zero():
        raise NotApplicableError("zero blocks are singletons, not pairs")
    expected = class_negate(EigenvalueClass(lam, domain)).rep
    if b2.eigenvalue != expected:
        raise NotApplicableError(
            f"blocks {b1} and {b2} are not a negation pair over {domain.value}")
    if b1.real_complex_pair:
        if lam.a == 0:
            raise NotApplicableError("purely imaginary pair blocks are singletons")
        rho = _paired_alternating_diag(domain, 2 * b1.size)
        return block_compose([rho, rho], "antidiagonal")
    if domain is ScalarDomain.H and lam.b != 0:
        # canonical second block stores -conj(lam); the j factor absorbs
        # the conjugation and forces the sign twist in the lower corner
        tau = _quaternion_alt_j(b1.size)
        return block_compose([tau, -tau], "antidiagonal")
    tau = _alternating_diag(domain, b1.size)
    return block_compose([tau, tau], "antidiagonal")


def group_singleton_reverser(block: JordanBlock, domain) -> Matrix:
    """Involution g with g B g^{-1} = B^{-1} for an admissible single block.

    Admissible: J(1, m) and J(-1, m) over any domain, and the real rotation
    block with alpha^2 + beta^2 = 1.  Both use exact Cayley companions.
    """
    domain = ScalarDomain(domain)
    lam = block.eigenvalue
    target = build_block(block, domain)
    if block.real_complex_pair:
        if lam.a * lam.a + lam.b * lam.b != 1:
            raise NotApplicableError(
                f"rotation reverser needs a unit-modulus class, got {lam}")
        a = lam.b / (1 + lam.a)
        seed = build_block(JordanBlock(Quaternion(0, a), block.size, True), domain)
        companion = cayley(seed)
        g0 = _paired_alternating_diag(domain, 2 * block.size)
    elif lam == Quaternion(1) or lam == Quaternion(-1):
        nilp = build_block(JordanBlock(Quaternion(0), block.size), domain)
        companion = cayley(nilp)
        if lam == Quaternion(-1):
            companion = -companion
        g0 = _alternating_diag(domain, block.size)
    else:
        raise NotApplicableError(f"no group singleton reverser for eigenvalue {lam}")
    conj = similarity_conjugator(companion, target)
    return mat_mul(mat_mul(conj, g0), mat_inverse(conj))


def group_pair_reverser(b1: JordanBlock, b2: JordanBlock, domain) -> Matrix:
    """Antidiagonal involution inverting build(b1) (+) build(b2), group level."""
    domain = ScalarDomain(domain)
    if b1.size != b2.size or b1.real_complex_pair != b2.real_complex_pair:
        raise NotApplicableError("pair blocks must share size and shape")
    lam = b1.eigenvalue
    if lam.is_zero():
        raise NotApplicableError("group reversers need invertible blocks")
    expected = class_invert(EigenvalueClass(lam, domain)).rep
    if b2.eigenvalue != expected:
        raise NotApplicableError(
            f"blocks {b1} and {b2} are not a reciprocal pair over {domain.value}")
    if (domain is ScalarDomain.H and lam.b != 0 and lam.norm_sq() == 1):
        # unit-modulus duplicate pair: solve the conjugacy over C, then
        # multiply by j so that the j itself carries the conjugation
        s = b1.size
        c_block = build_block(JordanBlock(lam.conjugate(), s), ScalarDomain.C)
        target = mat_inverse(build_block(JordanBlock(lam, s), ScalarDomain.C))
        y = similarity_conjugator(c_block, target)
        x = y.retag(ScalarDomain.H) * _J
        return block_compose([x, mat_inverse(x)], "antidiagonal")
    x = similarity_conjugator(build_block(b2, domain),
                              mat_inverse(build_block(b1, domain)))
    return block_compose([x, mat_inverse(x)], "antidiagonal")


def _singleton_for(mode: QuestionLevel, block: JordanBlock, domain) -> Matrix:
    if mode is QuestionLevel.LIE:
        return lie_singleton_reverser(block, domain)
    return group_singleton_reverser(block, domain)


def _pair_for(mode: QuestionLevel, b1: JordanBlock, b2: JordanBlock, domain) -> Matrix:
    if mode is QuestionLevel.LIE:
        return lie_pair_reverser(b1, b2, domain)
    return group_pair_reverser(b1, b2, domain)


def assemble_witness(dec: Decomposition, plan: PairingPlan,
                     mode: QuestionLevel) -> Witness:
    """Transport per-block reversers through the decomposition.

    Permutes the canonical blocks so every plan pair sits adjacent, stacks
    the per-entry reversers block diagonally, and conjugates back through
    the permutation and the decomposition's conjugator S.
    """
    blocks = dec.spec.blocks
    covered = sorted(i for e in plan.entries for i in e.blocks)
    if covered != list(range(len(blocks))):
        raise PlanMismatchError(
            f"plan covers {covered}, spec has {len(blocks)} blocks")
    domain = dec.spec.domain
    parts = []
    tags = []
    order = []
    for entry in plan.entries:
        order.extend(entry.blocks)
        tags.append(entry.pattern)
        if entry.kind == "singleton":
            parts.append(_singleton_for(mode, blocks[entry.blocks[0]], domain))
        elif entry.kind == "pair":
            i, j = entry.blocks
            parts.append(_pair_for(mode, blocks[i], blocks[j], domain))
        else:
            raise PlanMismatchError(f"unknown plan entry kind {entry.kind!r}")
    g_arr = block_compose(parts)
    perm = block_permutation([b.dimension for b in blocks], order)
    g_canonical = permute_conjugate(g_arr, perm.inverse())
    s = dec.conjugator
    g = mat_mul(mat_mul(mat_inverse(s), g_canonical), s)
    return Witness(g, mode, tuple(tags))


def certify(A: Matrix, w: Witness) -> Certificate:
    """Check g^2 = I and the reversal identity by exact equality."""
    g = w.g
    if A.domain is not g.domain:
        raise DomainMismatchError("witness and matrix domains differ")
    if (A.rows, A.cols) != (g.rows, g.cols) or not A.is_square():
        raise ShapeMismatchError("witness and matrix shapes differ")
    eye = Matrix.identity(A.domain, A.rows)
    if mat_mul(g, g) != eye:
        raise CertificationFailedError("g*g == I")
    conjugated = mat_mul(mat_mul(g, A), g)
    if w.mode is QuestionLevel.LIE:
        if conjugated != -A:
            raise CertificationFailedError("g*A*g^-1 == -A")
    else:
        if conjugated != mat_inverse(A):
            raise CertificationFailedError("g*A*g^-1 == A^-1")
    return Certificate(w, True, True)
