"""Reusable minimal-logic lemmas and the propositional bridge.

``bridge`` proves a goal from closed facts by propositional reasoning in
which chosen subformulas are opaque atoms: the propositional skeleton is
proved once by the G4ip engine (ML mode), cached, and instantiated back.
Quantifier steps are not propositional and use the hand-written lemmas
below instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..syntax import (
    BOTTOM, Atom, Bottom, Conj, Disj, Exists, Forall, Formula, Impl, LogicId,
    Sequent, Var, alpha_key, neg, render, replace_atoms,
)
from .terms import (
    Abst, Apply, Case, ExFalso, Gen, Hyp, Inst, InjL, InjR, Pair, ProjL, ProjR,
    ProofTerm, Unpack, Witness, DoubleNegElim, subterms,
)

__all__ = [
    "SynthesisError", "Equiv", "identity", "bridge", "bridge_equiv", "forall_congr",
    "exists_congr", "not_exists_forall_not", "exists_or_bottom", "dni",
    "library", "instantiate",
]


class SynthesisError(RuntimeError):
    pass


@dataclass(frozen=True)
class Equiv:
    """Closed ML proofs of ``left -> right`` and ``right -> left``."""

    left: Formula
    right: Formula
    fwd: ProofTerm
    bwd: ProofTerm

    def facts(self) -> list:
        return [(Impl(self.left, self.right), self.fwd), (Impl(self.right, self.left), self.bwd)]

    def as_conjunction(self) -> ProofTerm:
        return Pair(self.fwd, self.bwd)

    def flip(self) -> "Equiv":
        return Equiv(self.right, self.left, self.bwd, self.fwd)


def identity(f: Formula) -> ProofTerm:
    return Abst("x", f, Hyp("x"))


def identity_equiv(left: Formula, right: Formula) -> Equiv:
    """For alpha-equal sides."""
    return Equiv(left, right, identity(left), identity(right))


def dni(proof: ProofTerm, formula: Formula, label: str = "n") -> ProofTerm:
    """From a proof of ``formula`` build one of its double negation."""
    return Abst(label, neg(formula), Apply(Hyp(label), proof))


# --------------------------------------------------------------- bridge

_PLACEHOLDER = "__o{}"


def _abstract(f: Formula, opaque: dict, table: dict) -> Formula:
    key = alpha_key(f)
    if key in opaque:
        if key not in table:
            table[key] = (Atom(_PLACEHOLDER.format(len(table))), f)
        return table[key][0]
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, (Forall, Exists)):
        # quantifiers are opaque to the propositional engine
        table.setdefault(key, (Atom(_PLACEHOLDER.format(len(table))), f))
        return table[key][0]
    return type(f)(_abstract(f.left, opaque, table), _abstract(f.right, opaque, table))


@lru_cache(maxsize=4096)
def _skeleton(goal: Formula, facts: tuple):
    from ..provers.g4ip import prove
    sequent = Sequent(tuple((f"f{i}", f) for i, f in enumerate(facts)), goal)
    return prove(LogicId.ML, sequent)


def instantiate(term: ProofTerm, mapping: dict) -> ProofTerm:
    """Replace placeholder atoms inside every formula annotation of a
    propositional proof term."""
    def sub(f):
        return replace_atoms(f, mapping)

    def go(t):
        if isinstance(t, Hyp):
            return t
        if isinstance(t, Abst):
            return Abst(t.label, sub(t.hypothesis), go(t.body))
        if isinstance(t, Apply):
            return Apply(go(t.fn), go(t.arg))
        if isinstance(t, Pair):
            return Pair(go(t.left), go(t.right))
        if isinstance(t, ProjL):
            return ProjL(go(t.proof))
        if isinstance(t, ProjR):
            return ProjR(go(t.proof))
        if isinstance(t, InjL):
            return InjL(go(t.proof), sub(t.other))
        if isinstance(t, InjR):
            return InjR(sub(t.other), go(t.proof))
        if isinstance(t, Case):
            return Case(go(t.scrut), t.label_left, go(t.body_left), t.label_right, go(t.body_right))
        if isinstance(t, ExFalso):
            return ExFalso(go(t.proof), sub(t.target))
        if isinstance(t, DoubleNegElim):
            return DoubleNegElim(go(t.proof))
        raise SynthesisError(f"unexpected first-order rule in a skeleton: {type(t).__name__}")

    return go(term)


def bridge(goal: Formula, facts: list, opaque: list = ()) -> ProofTerm:
    """Closed ML proof of ``goal`` from ``facts`` = [(formula, closed proof)]."""
    opaque_keys = {alpha_key(f) for f in opaque if not isinstance(f, (Atom, Bottom))}
    table: dict = {}
    abs_goal = _abstract(goal, opaque_keys, table)
    abs_facts = tuple(_abstract(f, opaque_keys, table) for f, _ in facts)
    skeleton = _skeleton(abs_goal, abs_facts)
    if skeleton is None and opaque_keys:
        # hiding a piece can lose an equivalence it takes part in; retry with
        # only the quantified subformulas abstracted
        return bridge(goal, facts)
    if skeleton is None:
        shown = ", ".join(render(f) for f in abs_facts)
        raise SynthesisError(f"no minimal-logic skeleton for {shown} |- {render(abs_goal)}")
    mapping = {ph: f for ph, f in table.values()}
    body = instantiate(skeleton, mapping)
    used = {t.label for t in subterms(skeleton) if isinstance(t, Hyp)}
    kept = [(f"f{i}", fact) for i, fact in enumerate(facts) if f"f{i}" in used]
    for label, (formula, _) in reversed(kept):
        body = Abst(label, formula, body)
    for _, (_, proof) in kept:
        body = Apply(body, proof)
    return body


def bridge_equiv(left: Formula, right: Formula, facts_from=(), opaque=(), extra_facts=(),
                 opaque_facts: bool = True) -> Equiv:
    """Both directions of ``left <-> right`` via ``bridge``; ``facts_from``
    are Equivs whose sides also become opaque unless ``opaque_facts`` is off."""
    facts = [fact for e in facts_from for fact in e.facts()] + list(extra_facts)
    opaque = list(opaque)
    if opaque_facts:
        opaque += [s for e in facts_from for s in (e.left, e.right)]
    return Equiv(left, right,
                 bridge(Impl(left, right), facts, opaque),
                 bridge(Impl(right, left), facts, opaque))


# ------------------------------------------------------ quantifier lemmas

def forall_congr(x: str, p: ProofTerm, src: Formula, dst: Formula) -> ProofTerm:
    """From closed ``p : src -> dst`` build ``forall x. src -> forall x. dst``."""
    return Abst("h", Forall(x, src), Gen(x, Apply(p, Inst(Hyp("h"), Var(x)))))


def exists_congr(x: str, p: ProofTerm, src: Formula, dst: Formula) -> ProofTerm:
    """From closed ``p : src -> dst`` build ``exists x. src -> exists x. dst``."""
    return Abst("h", Exists(x, src),
                Unpack(Hyp("h"), x, "u", Witness(Var(x), Apply(p, Hyp("u")), Exists(x, dst))))


def forall_congr_equiv(x: str, e: Equiv) -> Equiv:
    return Equiv(Forall(x, e.left), Forall(x, e.right),
                 forall_congr(x, e.fwd, e.left, e.right), forall_congr(x, e.bwd, e.right, e.left))


def exists_congr_equiv(x: str, e: Equiv) -> Equiv:
    return Equiv(Exists(x, e.left), Exists(x, e.right),
                 exists_congr(x, e.fwd, e.left, e.right), exists_congr(x, e.bwd, e.right, e.left))


def not_exists_forall_not(x: str, body: Formula) -> Equiv:
    """``~exists x. A <-> forall x. ~A``."""
    ex = Exists(x, body)
    fwd = Abst("n", neg(ex), Gen(x, Abst("a", body, Apply(Hyp("n"), Witness(Var(x), Hyp("a"), ex)))))
    bwd = Abst("g", Forall(x, neg(body)),
               Abst("e", ex, Unpack(Hyp("e"), x, "u", Apply(Inst(Hyp("g"), Var(x)), Hyp("u")))))
    return Equiv(neg(ex), Forall(x, neg(body)), fwd, bwd)


def exists_or_bottom(x: str, body: Formula) -> Equiv:
    """``exists x. (A | false) <-> (exists x. A) | false``."""
    left = Exists(x, Disj(body, BOTTOM))
    ex = Exists(x, body)
    right = Disj(ex, BOTTOM)
    fwd = Abst("h", left, Unpack(Hyp("h"), x, "u", Case(
        Hyp("u"),
        "a", InjL(Witness(Var(x), Hyp("a"), ex), BOTTOM),
        "b", InjR(ex, Hyp("b")))))
    bwd = Abst("d", right, Case(
        Hyp("d"),
        "e", Unpack(Hyp("e"), x, "u", Witness(Var(x), InjL(Hyp("u"), BOTTOM), left)),
        "b", Witness(Var(x), InjR(body, Hyp("b")), left)))
    return Equiv(left, right, fwd, bwd)


# --------------------------------------------------------- lemma library

def _p(name):
    return Atom(name)


def library() -> dict:
    """Named schematic lemmas (instantiated at atoms D, E), each with the
    formula it proves. Every entry is an ML proof."""
    D, E = _p("D"), _p("E")
    nD, nE = neg(D), neg(E)
    out = {}

    # D -> ~~D
    out["dni"] = (Impl(D, neg(nD)), Abst("d", D, dni(Hyp("d"), D, "k")))

    # ~~(D -> ~E) -> (D -> ~E)
    f = Impl(D, nE)
    out["stable-negated-implication"] = (
        Impl(neg(neg(f)), f),
        Abst("h", neg(neg(f)), Abst("d", D, Abst("e", E, Apply(
            Hyp("h"), Abst("g", f, Apply(Apply(Hyp("g"), Hyp("d")), Hyp("e"))))))),
    )

    # D | ~~E -> ~~(D | E)
    out["disjunction-double-negation"] = (
        Impl(Disj(D, neg(nE)), neg(neg(Disj(D, E)))),
        Abst("h", Disj(D, neg(nE)), Abst("k", neg(Disj(D, E)), Case(
            Hyp("h"),
            "d", Apply(Hyp("k"), InjL(Hyp("d"), E)),
            "n", Apply(Hyp("n"), Abst("e", E, Apply(Hyp("k"), InjR(D, Hyp("e")))))))),
    )

    # ~~D -> ~~E given D -> E (double-negation monotonicity), stated as an implication
    out["double-negation-monotone"] = (
        Impl(Impl(D, E), Impl(neg(nD), neg(nE))),
        Abst("f", Impl(D, E), Abst("h", neg(nD), Abst("k", nE, Apply(
            Hyp("h"), Abst("d", D, Apply(Hyp("k"), Apply(Hyp("f"), Hyp("d")))))))),
    )

    # false | false <-> false
    bb = Disj(BOTTOM, BOTTOM)
    out["bottom-or-bottom"] = (
        Conj(Impl(bb, BOTTOM), Impl(BOTTOM, bb)),
        Pair(Abst("d", bb, Case(Hyp("d"), "a", Hyp("a"), "b", Hyp("b"))),
             Abst("b", BOTTOM, InjL(Hyp("b"), BOTTOM))),
    )

    # ~false
    out["not-bottom"] = (neg(BOTTOM), Abst("b", BOTTOM, Hyp("b")))

    # ~~~D -> ~D
    out["triple-negation"] = (
        Impl(neg(neg(nD)), nD),
        Abst("h", neg(neg(nD)), Abst("d", D, Apply(Hyp("h"), dni(Hyp("d"), D, "k")))),
    )
    return out
