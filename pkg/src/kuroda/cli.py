"""Command line interface: translate, prove, check-proof, countermodel, verify.

Exit codes: 0 success (provable, accepted, countermodel printed, suites
passed), 1 negative result, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .generate import GeneratorConfig
from .harness import SUITES, run_suite
from .proofs.checker import check_proof
from .proofs.sexpr import ProofFileError, dump_proof, read_proof
from .provers.g4ip import Decision, QuantifierError, decide, prove
from .provers.semantics import countermodel
from .syntax import (
    Atom, Bottom, LogicId, ParseError, Sequent, parse, render,
)
from .translations import KURODA_VARIANTS, MUTATIONS, TranslationId, apply_translation

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

_NEG = {"ascii": "~~", "unicode": "¬¬"}


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _warn(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def _style(fmt: str) -> str:
    return "unicode" if fmt == "unicode" else "ascii"


def _parse_formula(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse formula {text!r}: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_variants(spec: str) -> list:
    """``k1..k8``, ``k2,k5`` or a single id."""
    out = []
    for part in spec.split(","):
        part = part.strip().lower()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = (TranslationId.parse(p) for p in part.split("..", 1))
                if not (lo.is_kuroda and hi.is_kuroda) or lo.index > hi.index:
                    raise UsageError(f"bad variant range {part!r}")
                out += [t for t in KURODA_VARIANTS if lo.index <= t.index <= hi.index]
            else:
                out.append(TranslationId.parse(part))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    for t in out:
        if not t.is_kuroda:
            raise UsageError(f"{t} is not one of k, k1..k8")
    if not out:
        raise UsageError("no variants selected")
    return out


# ---------------------------------------------------------------- commands

def cmd_translate(args) -> int:
    try:
        tid = TranslationId.parse(args.variant)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    formula = _parse_formula(args.formula)
    if args.inner and not tid.is_kuroda:
        raise UsageError("--inner applies to k and k1..k8 only")
    witness = None
    if args.witness is not None:
        if tid is not TranslationId.T5:
            raise UsageError("--witness applies to t5 only")
        witness = _parse_formula(args.witness)
    try:
        out = apply_translation(tid, formula, inner=args.inner, witness=witness)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    if args.format == "json":
        _emit(json.dumps({"variant": str(tid), "inner": args.inner, "input": render(formula),
                          "output": render(out)}))
        return EXIT_OK
    style = _style(args.format)
    if tid.is_kuroda and not args.inner:
        # show the outer double negation around the inner body explicitly
        body = out.left.left
        shown = render(body, style)
        if not isinstance(body, (Atom, Bottom)):
            shown = f"({shown})"
        _emit(_NEG[style] + shown)
    else:
        _emit(render(out, style))
    return EXIT_OK


def cmd_prove(args) -> int:
    logic = LogicId.parse(args.logic)
    hyps = tuple((f"h{i + 1}", _parse_formula(h)) for i, h in enumerate(args.hyp or ()))
    sequent = Sequent(hyps, _parse_formula(args.formula))
    try:
        decision = decide(logic, sequent)
    except QuantifierError as exc:
        raise UsageError(str(exc)) from exc
    proof = None
    if args.trace and decision is Decision.PROVABLE and logic is not LogicId.CL:
        proof = prove(logic, sequent)
    if args.format == "json":
        payload = {"logic": logic.name.lower(), "formula": render(sequent.conclusion),
                   "hypotheses": [render(h) for _, h in hyps], "decision": decision.value}
        if proof is not None:
            payload["proof"] = dump_proof(proof)
        _emit(json.dumps(payload))
    else:
        _emit(decision.value)
        if proof is not None:
            _emit(dump_proof(proof))
        elif args.trace and decision is Decision.PROVABLE:
            _warn("no proof term for CL: decided by truth table")
    return EXIT_OK if decision is Decision.PROVABLE else EXIT_NEGATIVE


def cmd_check_proof(args) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    try:
        sequent, logic, proof = read_proof(text)
    except (ProofFileError, ParseError, ValueError) as exc:
        raise UsageError(f"{args.file}: {exc}") from exc
    result = check_proof(proof, sequent, logic)
    if args.format == "json":
        _emit(json.dumps({"logic": logic.name.lower(), "accepted": result.accepted,
                          "reason": result.reason, "path": list(result.path),
                          "message": result.message}))
    else:
        _emit(str(result))
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_countermodel(args) -> int:
    logic = LogicId.parse(args.logic)
    if logic is LogicId.CL:
        raise UsageError("countermodels are searched for ml and il only")
    if args.max_worlds < 1:
        raise UsageError("--max-worlds must be positive")
    formula = _parse_formula(args.formula)
    try:
        model = countermodel(logic, formula, args.max_worlds)
    except QuantifierError as exc:
        raise UsageError(str(exc)) from exc
    if model is None:
        _warn(f"no countermodel with at most {args.max_worlds} worlds")
        return EXIT_NEGATIVE
    _emit(json.dumps(model.to_json()))
    return EXIT_OK


def _seed(value: Optional[str]) -> int:
    raw = value if value is not None else os.environ.get("KF_SEED", "0")
    try:
        return int(raw, 0)
    except ValueError as exc:
        raise UsageError(f"seed must be an integer, got {raw!r}") from exc


def cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    variants = parse_variants(args.variants)
    if args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    try:
        config = GeneratorConfig(max_depth=args.depth, seed=_seed(args.seed))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    reports = []
    for suite in suites:
        try:
            report = run_suite(suite, config, variants, args.samples,
                               mutation_name=args.mutation, only=args.only,
                               max_worlds=args.max_worlds)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        reports.append(report)
        # progress and failures are diagnostics; the report is the artifact
        status = "PASS" if report.passed else "FAIL"
        _warn(f"{status} {suite}: {report.checks} checks, {len(report.failures)} failures, "
              f"{report.elapsed_ms:.0f} ms")
        for f in report.failures[:args.show]:
            _warn(f"  [{f.index}] {f.variant or ''} {f.formula}: expected {f.expected}, "
                  f"got {f.actual}\n    replay: {f.replay}")

    payload = [r.to_json() for r in reports] if args.suite == "all" else reports[0].to_json()
    if args.json:
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    else:
        _emit(json.dumps(payload, indent=None if args.format == "json" else 2))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("ascii", "unicode", "json"), default=argparse.SUPPRESS,
                     help="output style (default ascii)")

    parser = argparse.ArgumentParser(
        prog="kuroda", parents=[fmt],
        description="Kuroda-style negative translations, propositional provers and proof checking.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("translate", parents=[fmt], help="translate a formula")
    p.add_argument("--variant", required=True, help="k, k1..k8, t1..t5")
    p.add_argument("--inner", action="store_true", help="print the body without the outer ~~")
    p.add_argument("--witness", help="closed formula C for t5 (default: fresh atom C0)")
    p.add_argument("formula")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("prove", parents=[fmt], help="decide a propositional formula")
    p.add_argument("--logic", required=True, choices=("ml", "il", "cl"))
    p.add_argument("--hyp", action="append", metavar="F", help="hypothesis (repeatable)")
    p.add_argument("--trace", action="store_true", help="also print a proof term (ml, il)")
    p.add_argument("formula")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check-proof", parents=[fmt], help="check a proof-term file ('-' for stdin)")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_proof)

    p = sub.add_parser("countermodel", parents=[fmt], help="search a finite Kripke countermodel")
    p.add_argument("--logic", required=True, choices=("ml", "il"))
    p.add_argument("--max-worlds", type=int, default=4)
    p.add_argument("formula")
    p.set_defaults(func=cmd_countermodel)

    p = sub.add_parser("verify", parents=[fmt], help="run verification suites")
    p.add_argument("--suite", default="all", help=f"all or one of: {', '.join(SUITES)}")
    p.add_argument("--variants", default="k1..k8", help="range like k1..k8 or a comma list")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", default=None, help="integer seed (default: $KF_SEED or 0)")
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--json", metavar="OUT", help="write the JSON report to this file")
    p.add_argument("--only", type=int, default=None, metavar="INDEX", help="replay one sample")
    p.add_argument("--mutation", choices=sorted(MUTATIONS), default=None,
                   help="activate a translation mutation (suite sanity check)")
    p.add_argument("--max-worlds", type=int, default=4)
    p.add_argument("--show", type=int, default=5, help="failures to print per suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "format"):
        args.format = "ascii"
    try:
        return args.func(args)
    except UsageError as exc:
        _warn(f"kuroda {args.command}: {exc}")
        return EXIT_USAGE
    except RecursionError:
        _warn(f"kuroda {args.command}: input too deeply nested")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
