"""Natural-deduction proof terms (Curry-Howard style)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from ..syntax import Formula, Term, Var


@dataclass(frozen=True)
class Hyp:
    label: str


@dataclass(frozen=True)
class Abst:
    label: str
    hypothesis: Formula
    body: "ProofTerm"


@dataclass(frozen=True)
class Apply:
    fn: "ProofTerm"
    arg: "ProofTerm"


@dataclass(frozen=True)
class Pair:
    left: "ProofTerm"
    right: "ProofTerm"


@dataclass(frozen=True)
class ProjL:
    proof: "ProofTerm"


@dataclass(frozen=True)
class ProjR:
    proof: "ProofTerm"


@dataclass(frozen=True)
class InjL:
    proof: "ProofTerm"
    other: Formula


@dataclass(frozen=True)
class InjR:
    other: Formula
    proof: "ProofTerm"


@dataclass(frozen=True)
class Case:
    scrut: "ProofTerm"
    label_left: str
    body_left: "ProofTerm"
    label_right: str
    body_right: "ProofTerm"


@dataclass(frozen=True)
class Gen:
    variable: str
    body: "ProofTerm"


@dataclass(frozen=True)
class Inst:
    proof: "ProofTerm"
    term: Term


@dataclass(frozen=True)
class Witness:
    term: Term
    proof: "ProofTerm"
    target: Formula


@dataclass(frozen=True)
class Unpack:
    scrut: "ProofTerm"
    variable: str
    label: str
    body: "ProofTerm"


@dataclass(frozen=True)
class ExFalso:
    proof: "ProofTerm"
    target: Formula


@dataclass(frozen=True)
class DoubleNegElim:
    proof: "ProofTerm"


ProofTerm = Union[Hyp, Abst, Apply, Pair, ProjL, ProjR, InjL, InjR, Case, Gen,
                  Inst, Witness, Unpack, ExFalso, DoubleNegElim]


def subterms(term: ProofTerm) -> Iterator[ProofTerm]:
    stack = [term]
    while stack:
        t = stack.pop()
        yield t
        stack.extend(reversed(children(t)))


def children(t: ProofTerm) -> tuple:
    if isinstance(t, Hyp):
        return ()
    if isinstance(t, (Abst, Gen)):
        return (t.body,)
    if isinstance(t, Apply):
        return (t.fn, t.arg)
    if isinstance(t, Pair):
        return (t.left, t.right)
    if isinstance(t, Case):
        return (t.scrut, t.body_left, t.body_right)
    if isinstance(t, Unpack):
        return (t.scrut, t.body)
    return (t.proof,)


def labels(term: ProofTerm) -> set:
    """Every hypothesis label mentioned anywhere in the term."""
    out = set()
    for t in subterms(term):
        if isinstance(t, (Hyp, Abst, Unpack)):
            out.add(t.label)
        elif isinstance(t, Case):
            out.update((t.label_left, t.label_right))
    return out


def term_size(term: ProofTerm) -> int:
    return sum(1 for _ in subterms(term))


class FreshLabels:
    """Generates hypothesis labels that avoid a given set of names."""

    def __init__(self, avoid: Iterable[str] = (), prefix: str = "h"):
        self.avoid = set(avoid)
        self.prefix = prefix
        self.count = 0

    def __call__(self, hint: str = "") -> str:
        while True:
            self.count += 1
            name = f"{hint or self.prefix}_{self.count}"
            if name not in self.avoid:
                self.avoid.add(name)
                return name


def lam(label: str, hypothesis: Formula, body: ProofTerm) -> Abst:
    return Abst(label, hypothesis, body)


def let(label: str, formula: Formula, value: ProofTerm, body: ProofTerm) -> ProofTerm:
    """``body`` with ``label : formula`` bound to ``value``, as a beta-redex."""
    return Apply(Abst(label, formula, body), value)


def var(name: str) -> Var:
    return Var(name)
