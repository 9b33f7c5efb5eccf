"""Type checker for proof terms under minimal, intuitionistic or classical logic.

IL is ML plus ``ExFalso``; CL is IL plus ``DoubleNegElim``. The eigenvariable
conditions are checked against the open hypotheses a subproof actually uses.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional

from ..syntax import (
    BOTTOM, Conj, Disj, Exists, Forall, Formula, Impl, LogicId, Sequent, Var,
    alpha_equal, free_variables, is_negation, render, substitute,
)
from .terms import (
    Abst, Apply, Case, DoubleNegElim, ExFalso, Gen, Hyp, Inst, InjL, InjR, Pair,
    ProjL, ProjR, ProofTerm, Unpack, Witness, subterms,
)

# Transformed proofs nest deeply; the checker recurses once per node.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

UNKNOWN_HYPOTHESIS = "unknown-hypothesis"
CONNECTIVE_MISMATCH = "connective-mismatch"
FORMULA_MISMATCH = "formula-mismatch"
EIGENVARIABLE = "eigenvariable-violation"
RULE_NOT_IN_LOGIC = "rule-not-in-logic"
CONCLUSION_MISMATCH = "conclusion-mismatch"


@dataclass(frozen=True)
class CheckResult:
    """``reason is None`` means accepted."""

    reason: Optional[str] = None
    path: tuple = ()
    message: str = ""

    @property
    def accepted(self) -> bool:
        return self.reason is None

    def __bool__(self) -> bool:
        return self.accepted

    def __str__(self) -> str:
        if self.accepted:
            return "accepted"
        where = "/".join(self.path) or "<root>"
        return f"rejected [{self.reason}] at {where}: {self.message}"


ACCEPTED = CheckResult()


class ProofError(ValueError):
    def __init__(self, reason: str, path: tuple, message: str):
        super().__init__(f"[{reason}] at {'/'.join(path) or '<root>'}: {message}")
        self.reason = reason
        self.path = path
        self.message = message


class _Checker:
    def __init__(self, logic: LogicId):
        self.logic = logic

    def fail(self, reason, path, message):
        raise ProofError(reason, path, message)

    def expect(self, got: Formula, want: Formula, path, what: str):
        if not alpha_equal(got, want):
            self.fail(FORMULA_MISMATCH, path,
                      f"{what}: expected {render(want)}, got {render(got)}")

    def infer(self, t: ProofTerm, ctx: dict, path: tuple):
        """Return (formula proved, set of free hypothesis labels used)."""
        if isinstance(t, Hyp):
            if t.label not in ctx:
                self.fail(UNKNOWN_HYPOTHESIS, path, f"no hypothesis {t.label!r} in scope")
            return ctx[t.label], {t.label}

        if isinstance(t, Abst):
            body, used = self.infer(t.body, {**ctx, t.label: t.hypothesis}, path + ("lam",))
            used.discard(t.label)
            return Impl(t.hypothesis, body), used

        if isinstance(t, Apply):
            fn, u1 = self.infer(t.fn, ctx, path + ("app.fn",))
            if not isinstance(fn, Impl):
                self.fail(CONNECTIVE_MISMATCH, path, f"applying a proof of {render(fn)}")
            arg, u2 = self.infer(t.arg, ctx, path + ("app.arg",))
            self.expect(arg, fn.left, path + ("app.arg",), "argument")
            return fn.right, u1 | u2

        if isinstance(t, Pair):
            a, u1 = self.infer(t.left, ctx, path + ("pair.l",))
            b, u2 = self.infer(t.right, ctx, path + ("pair.r",))
            return Conj(a, b), u1 | u2

        if isinstance(t, (ProjL, ProjR)):
            step = "fst" if isinstance(t, ProjL) else "snd"
            p, used = self.infer(t.proof, ctx, path + (step,))
            if not isinstance(p, Conj):
                self.fail(CONNECTIVE_MISMATCH, path, f"projection from {render(p)}")
            return (p.left if isinstance(t, ProjL) else p.right), used

        if isinstance(t, InjL):
            a, used = self.infer(t.proof, ctx, path + ("inl",))
            return Disj(a, t.other), used

        if isinstance(t, InjR):
            b, used = self.infer(t.proof, ctx, path + ("inr",))
            return Disj(t.other, b), used

        if isinstance(t, Case):
            d, u0 = self.infer(t.scrut, ctx, path + ("case.scrut",))
            if not isinstance(d, Disj):
                self.fail(CONNECTIVE_MISMATCH, path, f"case analysis on {render(d)}")
            c1, u1 = self.infer(t.body_left, {**ctx, t.label_left: d.left}, path + ("case.l",))
            c2, u2 = self.infer(t.body_right, {**ctx, t.label_right: d.right}, path + ("case.r",))
            self.expect(c2, c1, path + ("case.r",), "case branches disagree")
            u1.discard(t.label_left)
            u2.discard(t.label_right)
            return c1, u0 | u1 | u2

        if isinstance(t, Gen):
            a, used = self.infer(t.body, ctx, path + ("gen",))
            for label in used:
                if t.variable in free_variables(ctx[label]):
                    self.fail(EIGENVARIABLE, path,
                              f"{t.variable} is free in hypothesis {label}: {render(ctx[label])}")
            return Forall(t.variable, a), used

        if isinstance(t, Inst):
            a, used = self.infer(t.proof, ctx, path + ("inst",))
            if not isinstance(a, Forall):
                self.fail(CONNECTIVE_MISMATCH, path, f"instantiating {render(a)}")
            return substitute(a.body, a.variable, t.term), used

        if isinstance(t, Witness):
            if not isinstance(t.target, Exists):
                self.fail(CONNECTIVE_MISMATCH, path, f"witness for {render(t.target)}")
            a, used = self.infer(t.proof, ctx, path + ("wit",))
            want = substitute(t.target.body, t.target.variable, t.term)
            self.expect(a, want, path + ("wit",), "witness instance")
            return t.target, used

        if isinstance(t, Unpack):
            e, u0 = self.infer(t.scrut, ctx, path + ("unpack.scrut",))
            if not isinstance(e, Exists):
                self.fail(CONNECTIVE_MISMATCH, path, f"unpacking {render(e)}")
            y = t.variable
            if y in free_variables(e):
                self.fail(EIGENVARIABLE, path, f"{y} is free in {render(e)}")
            inst = substitute(e.body, e.variable, Var(y))
            c, used = self.infer(t.body, {**ctx, t.label: inst}, path + ("unpack.body",))
            used.discard(t.label)
            if y in free_variables(c):
                self.fail(EIGENVARIABLE, path, f"{y} escapes into {render(c)}")
            for label in used:
                if y in free_variables(ctx[label]):
                    self.fail(EIGENVARIABLE, path,
                              f"{y} is free in hypothesis {label}: {render(ctx[label])}")
            return c, u0 | used

        if isinstance(t, ExFalso):
            if self.logic is LogicId.ML:
                self.fail(RULE_NOT_IN_LOGIC, path, "ex falso is not a rule of minimal logic")
            b, used = self.infer(t.proof, ctx, path + ("efq",))
            self.expect(b, BOTTOM, path + ("efq",), "ex falso premise")
            return t.target, used

        if isinstance(t, DoubleNegElim):
            if self.logic is not LogicId.CL:
                self.fail(RULE_NOT_IN_LOGIC, path,
                          f"double-negation elimination is not a rule of {self.logic.name}")
            nn, used = self.infer(t.proof, ctx, path + ("dne",))
            if not (is_negation(nn) and is_negation(nn.left)):
                self.fail(CONNECTIVE_MISMATCH, path, f"eliminating double negation of {render(nn)}")
            return nn.left.left, used

        raise TypeError(f"not a proof term: {t!r}")


def infer(proof: ProofTerm, sequent_or_ctx, logic: LogicId) -> Formula:
    """The formula ``proof`` proves from the given hypotheses; raises ProofError."""
    if isinstance(sequent_or_ctx, Sequent):
        ctx = dict(sequent_or_ctx.hypotheses)
    else:
        ctx = dict(sequent_or_ctx)
    formula, _ = _Checker(logic).infer(proof, ctx, ())
    return formula


def check_proof(proof: ProofTerm, sequent: Sequent, logic: LogicId) -> CheckResult:
    try:
        got = infer(proof, sequent, logic)
    except ProofError as e:
        return CheckResult(e.reason, e.path, e.message)
    if not alpha_equal(got, sequent.conclusion):
        return CheckResult(CONCLUSION_MISMATCH, (),
                           f"proves {render(got)}, not {render(sequent.conclusion)}")
    return ACCEPTED


def uses_rule(proof: ProofTerm, rule: type) -> bool:
    return any(isinstance(t, rule) for t in subterms(proof))
