"""Proof-term files: parenthesized prefix notation with a sequent header.

    ; comment
    (sequent (hyp h1 "~~P") "P" cl)
    (dne (hyp h1))

Constructors: hyp, lam, app, pair, fst, snd, inl, inr, case, gen, inst,
wit, unpack, efq, dne.
"""

from __future__ import annotations

import re
from typing import Union

from ..syntax import LogicId, Sequent, Formula, ParseError, parse, parse_term, render
from .terms import (
    Abst, Apply, Case, DoubleNegElim, ExFalso, Gen, Hyp, Inst, InjL, InjR, Pair,
    ProjL, ProjR, ProofTerm, Unpack, Witness,
)

__all__ = ["ProofFileError", "read_proof", "parse_proof", "dump_proof", "dump_proof_file"]


class ProofFileError(ValueError):
    pass


class _Str(str):
    """A quoted string token, as opposed to a bare symbol."""


_TOKEN = re.compile(r'\s+|;[^\n]*|(\()|(\))|"((?:[^"\\]|\\.)*)"|([^\s()";]+)')

SExpr = Union[str, list]


def _read_all(text: str) -> list:
    stack: list = [[]]
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ProofFileError(f"unterminated string or bad character at offset {pos}")
        pos = m.end()
        if m.group(1):
            stack.append([])
        elif m.group(2):
            if len(stack) == 1:
                raise ProofFileError(f"unbalanced ')' at offset {m.start()}")
            done = stack.pop()
            stack[-1].append(done)
        elif m.group(3) is not None:
            stack[-1].append(_Str(re.sub(r"\\(.)", r"\1", m.group(3))))
        elif m.group(4):
            stack[-1].append(m.group(4))
    if len(stack) != 1:
        raise ProofFileError("unbalanced '(' at end of input")
    return stack[0]


def _formula(x: SExpr) -> Formula:
    if not isinstance(x, str):
        raise ProofFileError(f"expected a formula string, got {_show(x)}")
    try:
        return parse(x)
    except (ParseError, ValueError) as e:
        raise ProofFileError(f"bad formula {x!r}: {e}") from e


def _symbol(x: SExpr) -> str:
    if not isinstance(x, str) or isinstance(x, _Str):
        raise ProofFileError(f"expected a name, got {_show(x)}")
    return x


def _term(x: SExpr):
    if not isinstance(x, str):
        raise ProofFileError(f"expected a term, got {_show(x)}")
    try:
        return parse_term(x)
    except ValueError as e:
        raise ProofFileError(f"bad term {x!r}: {e}") from e


def _show(x: SExpr) -> str:
    if isinstance(x, list):
        return "(" + " ".join(_show(y) for y in x) + ")"
    return repr(x) if isinstance(x, _Str) else x


_ARITY = {"hyp": 1, "lam": 3, "app": 2, "pair": 2, "fst": 1, "snd": 1, "inl": 2,
          "inr": 2, "case": 5, "gen": 2, "inst": 2, "wit": 3, "unpack": 4, "efq": 2,
          "dne": 1}


def _proof(x: SExpr) -> ProofTerm:
    if not isinstance(x, list) or not x:
        raise ProofFileError(f"expected a proof term, got {_show(x)}")
    head, args = x[0], x[1:]
    if head not in _ARITY:
        raise ProofFileError(f"unknown constructor {_show(head)}")
    if len(args) != _ARITY[head]:
        raise ProofFileError(f"{head} takes {_ARITY[head]} arguments, got {len(args)}")
    if head == "hyp":
        return Hyp(_symbol(args[0]))
    if head == "lam":
        return Abst(_symbol(args[0]), _formula(args[1]), _proof(args[2]))
    if head == "app":
        return Apply(_proof(args[0]), _proof(args[1]))
    if head == "pair":
        return Pair(_proof(args[0]), _proof(args[1]))
    if head == "fst":
        return ProjL(_proof(args[0]))
    if head == "snd":
        return ProjR(_proof(args[0]))
    if head == "inl":
        return InjL(_proof(args[0]), _formula(args[1]))
    if head == "inr":
        return InjR(_formula(args[0]), _proof(args[1]))
    if head == "case":
        return Case(_proof(args[0]), _symbol(args[1]), _proof(args[2]),
                    _symbol(args[3]), _proof(args[4]))
    if head == "gen":
        return Gen(_symbol(args[0]), _proof(args[1]))
    if head == "inst":
        return Inst(_proof(args[0]), _term(args[1]))
    if head == "wit":
        return Witness(_term(args[0]), _proof(args[1]), _formula(args[2]))
    if head == "unpack":
        return Unpack(_proof(args[0]), _symbol(args[1]), _symbol(args[2]), _proof(args[3]))
    if head == "efq":
        return ExFalso(_proof(args[0]), _formula(args[1]))
    return DoubleNegElim(_proof(args[0]))


def _sequent(x: SExpr):
    if not (isinstance(x, list) and len(x) >= 3 and x[0] == "sequent"):
        raise ProofFileError("header must be (sequent (hyp LABEL \"F\")... \"CONCLUSION\" LOGIC)")
    hyps = []
    for h in x[1:-2]:
        if not (isinstance(h, list) and len(h) == 3 and h[0] == "hyp"):
            raise ProofFileError(f"bad hypothesis {_show(h)}")
        hyps.append((_symbol(h[1]), _formula(h[2])))
    try:
        logic = LogicId.parse(_symbol(x[-1]))
        sequent = Sequent(tuple(hyps), _formula(x[-2]))
    except ValueError as e:
        raise ProofFileError(str(e)) from e
    return sequent, logic


def parse_proof(text: str) -> ProofTerm:
    """Parse a bare proof term (no header)."""
    items = _read_all(text)
    if len(items) != 1:
        raise ProofFileError(f"expected one proof term, found {len(items)} expressions")
    return _proof(items[0])


def read_proof(text: str):
    """Parse a proof file into ``(sequent, logic, proof)``."""
    items = _read_all(text)
    if len(items) != 2:
        raise ProofFileError(f"expected a header and one proof term, found {len(items)} expressions")
    sequent, logic = _sequent(items[0])
    return sequent, logic, _proof(items[1])


def _q(f: Formula) -> str:
    text = render(f)
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dump_proof(t: ProofTerm) -> str:
    if isinstance(t, Hyp):
        return f"(hyp {t.label})"
    if isinstance(t, Abst):
        return f"(lam {t.label} {_q(t.hypothesis)} {dump_proof(t.body)})"
    if isinstance(t, Apply):
        return f"(app {dump_proof(t.fn)} {dump_proof(t.arg)})"
    if isinstance(t, Pair):
        return f"(pair {dump_proof(t.left)} {dump_proof(t.right)})"
    if isinstance(t, ProjL):
        return f"(fst {dump_proof(t.proof)})"
    if isinstance(t, ProjR):
        return f"(snd {dump_proof(t.proof)})"
    if isinstance(t, InjL):
        return f"(inl {dump_proof(t.proof)} {_q(t.other)})"
    if isinstance(t, InjR):
        return f"(inr {_q(t.other)} {dump_proof(t.proof)})"
    if isinstance(t, Case):
        return (f"(case {dump_proof(t.scrut)} {t.label_left} {dump_proof(t.body_left)} "
                f"{t.label_right} {dump_proof(t.body_right)})")
    if isinstance(t, Gen):
        return f"(gen {t.variable} {dump_proof(t.body)})"
    if isinstance(t, Inst):
        return f'(inst {dump_proof(t.proof)} "{t.term}")'
    if isinstance(t, Witness):
        return f'(wit "{t.term}" {dump_proof(t.proof)} {_q(t.target)})'
    if isinstance(t, Unpack):
        return f"(unpack {dump_proof(t.scrut)} {t.variable} {t.label} {dump_proof(t.body)})"
    if isinstance(t, ExFalso):
        return f"(efq {dump_proof(t.proof)} {_q(t.target)})"
    if isinstance(t, DoubleNegElim):
        return f"(dne {dump_proof(t.proof)})"
    raise TypeError(f"not a proof term: {t!r}")


def dump_proof_file(proof: ProofTerm, sequent: Sequent, logic: LogicId) -> str:
    hyps = "".join(f" (hyp {label} {_q(f)})" for label, f in sequent.hypotheses)
    return f"(sequent{hyps} {_q(sequent.conclusion)} {logic.value})\n{dump_proof(proof)}\n"
