"""Command-line front door.

``revlin classify`` runs the full pipeline on a matrix or Jordan-spec JSON
document: parse, decompose (matrices only), classify, synthesize and
certify a witness on request, and escalate unknown verdicts to the
involution search.  ``revlin generate`` emits seeded test corpora.

Exit codes: 0 = yes, 1 = no, 2 = unknown, 3 = any error.  The report is a
single JSON document on stdout (or --output).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Union

from .canonical import Decomposition, JordanSpec, assemble, jordan_decompose
from .classify import Answer, Question, QuestionStrength, classify
from .corpus import generate
from .errors import ParseError, RevlinError
from .matrices import Matrix
from .oracle import involution_search
from .witness import assemble_witness, certify

_EXIT = {Answer.YES: 0, Answer.NO: 1, Answer.UNKNOWN: 2}
_EXIT_ERROR = 3


@dataclass(frozen=True)
class RunConfig:
    question: Question
    input_text: str
    emit_witness: bool = False
    oracle_budget: int = 0
    seed: int = 0
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.oracle_budget < 0:
            raise ParseError("oracle budget must be non-negative")


def parse_input(text: str) -> Union[Matrix, JordanSpec]:
    """Parse a matrix or Jordan-spec JSON document (detected by its keys)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("input must be a JSON object")
    if "entries" in doc:
        return Matrix.from_json_dict(doc)
    if "blocks" in doc:
        return JordanSpec.from_json_dict(doc)
    raise ParseError('input needs "entries" (matrix) or "blocks" (spec)')


def run(config: RunConfig) -> tuple[dict, int]:
    """Execute the pipeline; returns (report document, exit code)."""
    question = config.question
    report: dict = {"question": question.to_json_dict(),
                    "questionLabel": question.label}
    try:
        value = parse_input(config.input_text)
        if isinstance(value, Matrix):
            report["input"] = {"kind": "matrix"}
            A = value
            dec = jordan_decompose(A)
        else:
            report["input"] = {"kind": "spec"}
            dec = Decomposition(value, Matrix.identity(value.domain, value.dimension))
            A = assemble(value)
        spec = dec.spec
        report["domain"] = spec.domain.value
        report["spec"] = spec.to_json_dict()

        verdict = classify(spec, question)
        report["verdict"] = verdict.to_json_dict()
        answer = verdict.answer

        report["witness"] = None
        report["certificate"] = None
        if config.emit_witness and answer is Answer.YES:
            # plain-level reversers need not be involutions; a witness is
            # synthesized through the strong-level plan when that exists
            strong = Question(question.level, QuestionStrength.STRONG)
            sv = verdict if question.strength is QuestionStrength.STRONG \
                else classify(spec, strong)
            if sv.answer is Answer.YES:
                w = assemble_witness(dec, sv.plan, question.level)
                cert = certify(A, w)
                report["witness"] = w.to_json_dict()
                report["certificate"] = {
                    "identityChecked": cert.identity_checked,
                    "involutionChecked": cert.involution_checked,
                }
            else:
                report["witnessUnavailable"] = sv.reason

        report["oracle"] = None
        if answer is Answer.UNKNOWN and config.oracle_budget > 0:
            orep = involution_search(A, question.level, config.oracle_budget,
                                     config.seed)
            report["oracle"] = orep.to_json_dict()
            if orep.outcome == "confirmed":
                answer = Answer.YES

        report["answer"] = answer.value
        return report, _EXIT[answer]
    except RevlinError as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        report["answer"] = "error"
        return report, _EXIT_ERROR


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, but 2 means "unknown" here
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="revlin",
                     description="exact reversibility and adjoint-reality "
                                 "classification over R, C and H")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cls = sub.add_parser("classify", help="classify a matrix or Jordan spec")
    p_cls.add_argument("--question", required=True,
                       choices=["adreal", "strong-adreal", "reversible",
                                "strong-reversible"])
    p_cls.add_argument("--input", required=True,
                       help="path to a JSON document, or - for stdin")
    p_cls.add_argument("--emit-witness", action="store_true")
    p_cls.add_argument("--oracle-budget", type=int, default=0)
    p_cls.add_argument("--seed", type=int, default=0)
    p_cls.add_argument("--output", default=None)

    p_gen = sub.add_parser("generate", help="emit a seeded spec corpus")
    p_gen.add_argument("--domain", required=True, choices=["R", "C", "H"])
    p_gen.add_argument("--question", required=True,
                       choices=["adreal", "strong-adreal", "reversible",
                                "strong-reversible"])
    p_gen.add_argument("--condition", required=True,
                       choices=["satisfy", "violate"])
    p_gen.add_argument("--max-dim", type=int, default=8)
    p_gen.add_argument("--count", type=int, default=10)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", default=None)
    return parser


def _emit(doc: dict, output_path: Optional[str]) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if output_path:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0].startswith("-"):
        argv = ["classify"] + argv  # flat flag form defaults to classify
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "generate":
            question = Question.from_label(args.question)
            specs = generate(args.domain, args.max_dim, question,
                             args.condition, args.seed, args.count)
            doc = {
                "domain": args.domain,
                "question": question.to_json_dict(),
                "condition": args.condition,
                "maxDim": args.max_dim,
                "seed": args.seed,
                "specs": [s.to_json_dict() for s in specs],
            }
            _emit(doc, args.output)
            return 0
        if args.input == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.input, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {args.input}: {exc}") from exc
        config = RunConfig(
            question=Question.from_label(args.question),
            input_text=text,
            emit_witness=args.emit_witness,
            oracle_budget=args.oracle_budget,
            seed=args.seed,
            output_path=args.output,
        )
        report, code = run(config)
        _emit(report, config.output_path)
        return code
    except RevlinError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)},
               "answer": "error"}, None)
        return _EXIT_ERROR
    except ValueError as exc:
        _emit({"error": {"type": "ValueError", "message": str(exc)},
               "answer": "error"}, None)
        return _EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
