"""Verdicts for the four reality/reversibility questions on a Jordan spec.

The questions are parametrized by level (lie: is X conjugate to -X? group:
is A conjugate to A^{-1}?) and strength (plain: by any conjugator; strong:
by an involution).  Both reduce to combinatorics on the block multiset:
the relevant involution on eigenvalue classes is negation (lie) or
inversion (group), the answer at plain strength is yes iff the multiset of
(class, size) counts is invariant, and iota-fixed classes are exactly the
ones the singleton clauses admit.

Over R and C, strong is equivalent to plain.  Over H the equivalence can
fail: a fixed non-real class needs its blocks paired in two identical
copies, so odd counts leave the question open (the literature proves the
even case and refutes only the single 1x1 block, which is delegated to the
analytic decision in :mod:`revlin.oracle`).  Those gaps are answered
``unknown`` rather than overclaimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .canonical import JordanSpec
from .errors import ParseError, SingularSpecError
from .scalars import EigenvalueClass, Quaternion, ScalarDomain, class_invert, class_negate


class QuestionLevel(str, Enum):
    LIE = "lie"
    GROUP = "group"


class QuestionStrength(str, Enum):
    PLAIN = "plain"
    STRONG = "strong"


class Answer(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


_LABELS = {
    "adreal": (QuestionLevel.LIE, QuestionStrength.PLAIN),
    "strong-adreal": (QuestionLevel.LIE, QuestionStrength.STRONG),
    "reversible": (QuestionLevel.GROUP, QuestionStrength.PLAIN),
    "strong-reversible": (QuestionLevel.GROUP, QuestionStrength.STRONG),
}


@dataclass(frozen=True)
class Question:
    level: QuestionLevel
    strength: QuestionStrength

    @classmethod
    def from_label(cls, label: str) -> "Question":
        try:
            level, strength = _LABELS[label]
        except KeyError:
            raise ParseError(f"unknown question {label!r}; "
                             f"expected one of {sorted(_LABELS)}") from None
        return cls(level, strength)

    @property
    def label(self) -> str:
        for label, (lvl, stg) in _LABELS.items():
            if (lvl, stg) == (self.level, self.strength):
                return label
        raise AssertionError("unreachable")

    def to_json_dict(self) -> dict:
        return {"level": self.level.value, "strength": self.strength.value}

    @classmethod
    def from_json_dict(cls, doc) -> "Question":
        try:
            return cls(QuestionLevel(doc["level"]), QuestionStrength(doc["strength"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed question document: {exc}") from exc


# pattern tags name the constructive involution shape a plan entry needs
PAT_NILPOTENT = "nilpotent-singleton"
PAT_IMAGINARY_ROTATION = "imaginary-rotation-singleton"
PAT_NEGATION_PAIR = "negation-pair"
PAT_QUATERNION_NEGATION_PAIR = "quaternion-negation-pair"
PAT_REAL_NEGATION_PAIR = "real-negation-pair"
PAT_UNIT_EIGENVALUE = "unit-eigenvalue-singleton"
PAT_ROTATION = "rotation-singleton"
PAT_RECIPROCAL_PAIR = "reciprocal-pair"
PAT_REAL_RECIPROCAL_PAIR = "real-reciprocal-pair"
PAT_UNIT_MODULUS_PAIR = "unit-modulus-duplicate-pair"
# plain-only singleton shapes (no involution construction exists for them)
PAT_IMAGINARY_SINGLETON = "imaginary-class-singleton"
PAT_UNIT_MODULUS_SINGLETON = "unit-modulus-class-singleton"


@dataclass(frozen=True)
class PlanEntry:
    kind: str  # "pair" | "singleton"
    blocks: tuple
    pattern: str

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "blocks": list(self.blocks), "pattern": self.pattern}

    @classmethod
    def from_json_dict(cls, doc) -> "PlanEntry":
        try:
            return cls(doc["kind"], tuple(doc["blocks"]), doc["pattern"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed plan entry: {exc}") from exc


@dataclass(frozen=True)
class PairingPlan:
    """A partition of block indices into theorem-admissible pairs/singletons."""

    entries: tuple

    @property
    def pairs(self):
        return tuple(e.blocks for e in self.entries if e.kind == "pair")

    @property
    def singletons(self):
        return tuple(e.blocks[0] for e in self.entries if e.kind == "singleton")

    def to_json_list(self) -> list:
        return [e.to_json_dict() for e in self.entries]

    @classmethod
    def from_json_list(cls, docs) -> "PairingPlan":
        return cls(tuple(PlanEntry.from_json_dict(d) for d in docs))


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    reason: str
    plan: Optional[PairingPlan] = None

    def to_json_dict(self) -> dict:
        return {
            "answer": self.answer.value,
            "reason": self.reason,
            "plan": self.plan.to_json_list() if self.plan is not None else None,
        }

    @classmethod
    def from_json_dict(cls, doc) -> "Verdict":
        try:
            plan = doc["plan"]
            return cls(Answer(doc["answer"]), doc["reason"],
                       None if plan is None else PairingPlan.from_json_list(plan))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed verdict document: {exc}") from exc


def involution_on_classes(level: QuestionLevel):
    return class_negate if level is QuestionLevel.LIE else class_invert


def _is_real(q: Quaternion) -> bool:
    return q.b == 0


def _singleton_pattern(block, level: QuestionLevel, domain: ScalarDomain) -> str:
    lam = block.eigenvalue
    if level is QuestionLevel.LIE:
        if lam.is_zero():
            return PAT_NILPOTENT
        if block.real_complex_pair:
            return PAT_IMAGINARY_ROTATION
        return PAT_IMAGINARY_SINGLETON  # H only: purely imaginary, plain-only
    if _is_real(lam):
        return PAT_UNIT_EIGENVALUE  # lam = 1 or -1
    if block.real_complex_pair:
        return PAT_ROTATION
    return PAT_UNIT_MODULUS_SINGLETON  # H only, plain-only


def _pair_pattern(block, level: QuestionLevel, domain: ScalarDomain) -> str:
    lam = block.eigenvalue
    if level is QuestionLevel.LIE:
        if block.real_complex_pair:
            return PAT_REAL_NEGATION_PAIR
        if domain is ScalarDomain.H and lam.b != 0:
            return PAT_QUATERNION_NEGATION_PAIR
        return PAT_NEGATION_PAIR
    if block.real_complex_pair:
        return PAT_REAL_RECIPROCAL_PAIR
    if domain is ScalarDomain.H and lam.b != 0 and lam.norm_sq() == 1:
        return PAT_UNIT_MODULUS_PAIR
    return PAT_RECIPROCAL_PAIR


def classify(spec: JordanSpec, question: Question) -> Verdict:
    """Decide one of the four questions for the canonical form ``spec``.

    A yes verdict always carries a pairing plan.  At strength strong the
    plan's every entry is realizable by the witness constructions; at
    strength plain it witnesses the partition condition only.
    """
    domain = spec.domain
    level = question.level
    if level is QuestionLevel.GROUP:
        for b in spec.blocks:
            if b.eigenvalue.is_zero():
                raise SingularSpecError("group-level questions need an invertible "
                                        "matrix; the spec has eigenvalue 0")
    iota = involution_on_classes(level)

    buckets: dict = {}
    for idx, b in enumerate(spec.blocks):
        buckets.setdefault((b.eigenvalue, b.size), []).append(idx)

    # plain condition: per (class, size), counts match the iota-partner class
    for (lam, size), idxs in buckets.items():
        partner = iota(EigenvalueClass(lam, domain)).rep
        partner_idxs = buckets.get((partner, size), [])
        if len(partner_idxs) != len(idxs):
            return Verdict(Answer.NO, "unpaired-blocks")

    entries = []
    strong_gap = False  # some fixed non-real class has an odd count
    for (lam, size), idxs in buckets.items():
        cls = EigenvalueClass(lam, domain)
        partner = iota(cls).rep
        block = spec.blocks[idxs[0]]
        if partner == lam:
            fixed_nonreal = (domain is ScalarDomain.H and lam.b != 0)
            if question.strength is QuestionStrength.STRONG and fixed_nonreal:
                # needs identical duplicate pairs
                for t in range(0, len(idxs) - 1, 2):
                    entries.append(PlanEntry("pair", (idxs[t], idxs[t + 1]),
                                             _pair_pattern(block, level, domain)))
                if len(idxs) % 2:
                    strong_gap = True
                    entries.append(PlanEntry("singleton", (idxs[-1],),
                                             _singleton_pattern(block, level, domain)))
            else:
                for idx in idxs:
                    entries.append(PlanEntry("singleton", (idx,),
                                             _singleton_pattern(block, level, domain)))
        elif (lam.a, lam.b) < (partner.a, partner.b):
            partner_idxs = buckets[(partner, size)]
            for ia, ib in zip(idxs, partner_idxs):
                entries.append(PlanEntry("pair", (ia, ib),
                                         _pair_pattern(block, level, domain)))

    plan = PairingPlan(tuple(entries))
    if question.strength is QuestionStrength.PLAIN or domain is not ScalarDomain.H:
        return Verdict(Answer.YES, "involution-invariant-blocks", plan)

    if not strong_gap:
        return Verdict(Answer.YES, "even-fixed-multiplicities", plan)

    if len(spec.blocks) == 1 and spec.blocks[0].size == 1:
        from .oracle import decide_1x1  # deferred: oracle depends on classify types

        ok = decide_1x1(spec.blocks[0].eigenvalue, level)
        if ok:
            return Verdict(Answer.YES, "one-by-one-analytic", plan)
        return Verdict(Answer.NO, "one-by-one-obstruction")

    return Verdict(Answer.UNKNOWN, "odd-fixed-multiplicity-undecided")
