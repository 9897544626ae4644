"""Seeded samplers: Jordan specs, theorem-condition corpora, conjugators.

Everything is deterministic in the supplied seed (one ``random.Random``
instance, fixed call order), which the acceptance suite relies on for
byte-for-byte reproducibility.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .canonical import JordanBlock, JordanSpec
from .classify import Question, QuestionLevel, QuestionStrength
from .matrices import Matrix
from .scalars import EigenvalueClass, Quaternion, ScalarDomain, class_invert, class_negate

_F = Fraction

# small exact eigenvalues; unit-modulus entries come from Pythagorean triples
_REALS = [_F(1), _F(-1), _F(2), _F(-2), _F(1, 2), _F(3), _F(-1, 2)]
_UNIT_COMPLEX = [(_F(3, 5), _F(4, 5)), (_F(4, 5), _F(3, 5)), (_F(5, 13), _F(12, 13))]


def _q(re, im=0) -> Quaternion:
    return Quaternion(re, im)


def _fixed_pool(domain, level):
    """Classes fixed by the level's involution (always singleton-admissible)."""
    if level is QuestionLevel.LIE:
        if domain is ScalarDomain.R:
            return [JordanBlockKind(_q(0), False), JordanBlockKind(_q(0, 1), True),
                    JordanBlockKind(_q(0, 2), True), JordanBlockKind(_q(0, _F(1, 2)), True)]
        if domain is ScalarDomain.C:
            return [JordanBlockKind(_q(0), False)]
        return [JordanBlockKind(_q(0), False), JordanBlockKind(_q(0, 1), False),
                JordanBlockKind(_q(0, 2), False), JordanBlockKind(_q(0, _F(1, 2)), False)]
    if domain is ScalarDomain.R:
        return ([JordanBlockKind(_q(1), False), JordanBlockKind(_q(-1), False)]
                + [JordanBlockKind(_q(a, b), True) for a, b in _UNIT_COMPLEX])
    if domain is ScalarDomain.C:
        return [JordanBlockKind(_q(1), False), JordanBlockKind(_q(-1), False)]
    return ([JordanBlockKind(_q(1), False), JordanBlockKind(_q(-1), False),
             JordanBlockKind(_q(0, 1), False)]
            + [JordanBlockKind(_q(a, b), False) for a, b in _UNIT_COMPLEX])


def _mobile_pool(domain, level):
    """Classes moved by the involution (must be paired with their partners)."""
    if level is QuestionLevel.LIE:
        if domain is ScalarDomain.R:
            return ([JordanBlockKind(_q(r), False) for r in _REALS]
                    + [JordanBlockKind(_q(1, 1), True), JordanBlockKind(_q(2, 1), True),
                       JordanBlockKind(_q(_F(1, 2), 1), True)])
        if domain is ScalarDomain.C:
            return ([JordanBlockKind(_q(r), False) for r in _REALS]
                    + [JordanBlockKind(_q(0, 1), False), JordanBlockKind(_q(1, 1), False),
                       JordanBlockKind(_q(2, -1), False)])
        return ([JordanBlockKind(_q(r), False) for r in _REALS]
                + [JordanBlockKind(_q(1, 1), False), JordanBlockKind(_q(2, 1), False),
                   JordanBlockKind(_q(_F(1, 2), 2), False)])
    if domain is ScalarDomain.R:
        return ([JordanBlockKind(_q(r), False) for r in _REALS if abs(r) != 1]
                + [JordanBlockKind(_q(1, 1), True), JordanBlockKind(_q(2, 1), True),
                   JordanBlockKind(_q(_F(1, 2), _F(1, 2)), True)])
    if domain is ScalarDomain.C:
        return ([JordanBlockKind(_q(r), False) for r in _REALS if abs(r) != 1]
                + [JordanBlockKind(_q(0, 1), False), JordanBlockKind(_q(1, 1), False),
                   JordanBlockKind(_q(_F(3, 5), _F(4, 5)), False)])
    return ([JordanBlockKind(_q(r), False) for r in _REALS if abs(r) != 1]
            + [JordanBlockKind(_q(1, 1), False), JordanBlockKind(_q(0, 2), False),
               JordanBlockKind(_q(2, 1), False)])


class JordanBlockKind:
    """An eigenvalue class plus the real-pair flag, before a size is chosen."""

    __slots__ = ("rep", "pair")

    def __init__(self, rep: Quaternion, pair: bool):
        self.rep = rep
        self.pair = pair

    def cost(self, size: int) -> int:
        return 2 * size if self.pair else size

    def block(self, size: int) -> JordanBlock:
        return JordanBlock(self.rep, size, self.pair)

    def partner(self, domain, level) -> "JordanBlockKind":
        iota = class_negate if level is QuestionLevel.LIE else class_invert
        return JordanBlockKind(iota(EigenvalueClass(self.rep, domain)).rep, self.pair)


def _satisfying_blocks(domain, question, max_dim, rng):
    level = question.level
    strong = question.strength is QuestionStrength.STRONG
    fixed = _fixed_pool(domain, level)
    mobile = _mobile_pool(domain, level)
    blocks = []
    used = set()
    budget = rng.randint(1, max_dim)
    while budget >= 1:
        pick_pair = budget >= 2 and rng.random() < 0.55
        if pick_pair:
            kind = rng.choice(mobile)
            size = rng.randint(1, max(1, budget // (2 * kind.cost(1))))
            if 2 * kind.cost(size) > budget:
                break
            partner = kind.partner(domain, level)
            blocks.append(kind.block(size))
            blocks.append(partner.block(size))
            used.add(kind.rep)
            used.add(partner.rep)
            budget -= 2 * kind.cost(size)
        else:
            kind = rng.choice(fixed)
            duplicate = (strong and domain is ScalarDomain.H and kind.rep.b != 0)
            copies = 2 if duplicate else 1
            if copies * kind.cost(1) > budget:
                kind = fixed[0]  # smallest fixed class always fits one block
                copies = 2 if (strong and domain is ScalarDomain.H and kind.rep.b != 0) else 1
                if copies * kind.cost(1) > budget:
                    break
            size = rng.randint(1, max(1, budget // (copies * kind.cost(1))))
            if copies * kind.cost(size) > budget:
                break
            for _ in range(copies):
                blocks.append(kind.block(size))
            used.add(kind.rep)
            budget -= copies * kind.cost(size)
        if rng.random() < 0.3:
            break
    if not blocks:
        kind = fixed[0]
        blocks.append(kind.block(1))
        used.add(kind.rep)
    return blocks, used


def _breaker(domain, question, used, rng, max_cost: int) -> JordanBlockKind:
    """A mobile class whose partner class is absent, so pairing must fail."""
    level = question.level
    pool = list(_mobile_pool(domain, level))
    rng.shuffle(pool)
    for kind in pool:
        partner = kind.partner(domain, level)
        if (kind.cost(1) <= max_cost and kind.rep not in used
                and partner.rep not in used and kind.rep != partner.rep):
            return kind
    raise AssertionError("breaker pool exhausted")


def generate(domain, max_dim: int, question: Question, condition: str,
             seed: int, count: int):
    """A deterministic corpus of specs satisfying or violating the question.

    ``condition="satisfy"`` yields specs whose block multisets meet the
    partition clause (and, at strength strong over H, the even-multiplicity
    clause), so they classify yes; ``"violate"`` adds one unpaired mobile
    class, so they classify no.
    """
    if max_dim < 1:
        raise ValueError("dimension bound must be at least 1")
    if condition not in ("satisfy", "violate"):
        raise ValueError(f"condition must be satisfy or violate, got {condition!r}")
    domain = ScalarDomain(domain)
    rng = random.Random(seed)
    specs = []
    for _ in range(count):
        if condition == "satisfy":
            blocks, _ = _satisfying_blocks(domain, question, max_dim, rng)
        else:
            reserve = 2 if max_dim >= 3 else 1
            blocks, used = ([], set()) if max_dim <= reserve else \
                _satisfying_blocks(domain, question, max_dim - reserve, rng)
            kind = _breaker(domain, question, used, rng, reserve)
            size = 1 if kind.cost(1) >= reserve else rng.randint(1, reserve // kind.cost(1))
            blocks.append(kind.block(size))
        specs.append(JordanSpec(domain, blocks))
    return specs


def random_spec(domain, max_dim: int, rng: random.Random) -> JordanSpec:
    """An unconstrained random spec with eigenvalues in Q(i) (for round trips)."""
    domain = ScalarDomain(domain)
    reals = [_q(r) for r in [_F(0)] + _REALS]
    complexes = [_q(0, 1), _q(1, 1), _q(2, 1), _q(_F(1, 2), 1), _q(-1, 2)]
    blocks = []
    budget = rng.randint(1, max_dim)
    while budget >= 1:
        if domain is ScalarDomain.R and budget >= 2 and rng.random() < 0.4:
            lam = rng.choice(complexes)
            size = rng.randint(1, budget // 2)
            blocks.append(JordanBlock(lam, size, True))
            budget -= 2 * size
        else:
            if domain is ScalarDomain.R:
                lam = rng.choice(reals)
            elif domain is ScalarDomain.C:
                lam = rng.choice(reals + complexes + [c.conjugate() for c in complexes])
            else:
                lam = rng.choice(reals + complexes)
            size = rng.randint(1, budget)
            blocks.append(JordanBlock(lam, size))
            budget -= size
        if rng.random() < 0.35:
            break
    if not blocks:
        blocks.append(JordanBlock(_q(1), 1))
    return JordanSpec(domain, blocks)


_UNITS = {
    ScalarDomain.R: [Quaternion(1), Quaternion(-1)],
    ScalarDomain.C: [Quaternion(1), Quaternion(-1), Quaternion(0, 1)],
    ScalarDomain.H: [Quaternion(1), Quaternion(-1), Quaternion(0, 1),
                     Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)],
}
_SHEAR = [Quaternion(1), Quaternion(-1), Quaternion(2), Quaternion(_F(1, 2))]


def random_invertible(domain, n: int, rng: random.Random) -> Matrix:
    """A random invertible matrix built from elementary row operations.

    Elementary products keep both T and T^{-1} small, which keeps
    conjugated test instances exact-arithmetic friendly.
    """
    domain = ScalarDomain(domain)
    rows = [[Quaternion(1 if i == j else 0) for j in range(n)] for i in range(n)]
    units = _UNITS[domain]
    shear = _SHEAR + ([Quaternion(0, 1)] if domain is not ScalarDomain.R else [])
    for _ in range(2 * n + 2):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.choice(shear)
            rows[i] = [rows[i][t] + c * rows[j][t] for t in range(n)]
        elif op == 1 and i != j:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            u = rng.choice(units)
            rows[i] = [u * rows[i][t] for t in range(n)]
    return Matrix.from_rows(domain, rows)
