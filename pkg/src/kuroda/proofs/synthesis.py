"""Minimal-logic proofs of the formula-level equivalences behind the
soundness of K1-K8, built by recursion on the formula.

Each recursion returns an ``Equiv`` for the subformula; propositional steps
go through ``bridge`` with the induction hypotheses as facts, quantifier
steps through the congruence lemmas.
"""

from __future__ import annotations

from typing import Optional

from ..syntax import (
    BOTTOM, Atom, Bottom, Conj, Disj, Exists, Forall, Formula, Impl, Var, alpha_equal,
    free_variables, neg,
)
from ..translations import (
    LEIVANT, TranslationId, default_witness, inner_translate, leivant_translate,
    shoenfield_translate, translate,
)
from .lemmas import (
    Equiv, bridge_equiv, exists_congr_equiv, exists_or_bottom, forall_congr_equiv,
    identity_equiv, not_exists_forall_not,
)
from .terms import Abst, Apply, Case, Gen, Hyp, InjL, InjR, Pair, ProofTerm, Witness

T = TranslationId

__all__ = [
    "synthesize_absorption", "absorb", "from_translated_bottom", "synthesize_equiv_leivant",
    "synthesize_equiv_shoenfield", "synthesize_equiv_k678", "equiv_leivant",
]


def _k(f: Formula) -> Formula:
    return inner_translate(T.K, f)


# ------------------------------------------------------------ absorption

def absorb(tid: TranslationId, formula: Formula, b: ProofTerm) -> ProofTerm:
    """Proof of ``leivant_translate(tid, formula)`` from a proof ``b`` of bottom.

    ``b`` must not mention labels bound here ("n", "f", "a"); pass a
    hypothesis reference or a closed term.
    """
    def go(f: Formula) -> ProofTerm:
        if isinstance(f, (Atom, Bottom)):
            if tid in (T.T1, T.T4):
                return InjR(f, b)
            if tid is T.T2:
                return Abst("n", neg(f), b)
            return Abst("f", Impl(BOTTOM, f), Apply(Hyp("f"), b))
        if isinstance(f, Conj):
            return Pair(go(f.left), go(f.right))
        if isinstance(f, Disj):
            return InjL(go(f.left), leivant_translate(tid, f.right))
        if isinstance(f, Impl):
            hyp = leivant_translate(tid, f.left)
            if tid is T.T4:
                return Abst("a", hyp, InjR(leivant_translate(tid, f.right), b))
            return Abst("a", hyp, go(f.right))
        if isinstance(f, Forall):
            return Gen(f.variable, go(f.body))
        return Witness(Var(f.variable), go(f.body), leivant_translate(tid, f))

    return go(formula)


def synthesize_absorption(tid: TranslationId, formula: Formula) -> ProofTerm:
    """ML proof of ``false -> leivant_translate(tid, formula)``."""
    if tid not in LEIVANT:
        raise ValueError(f"{tid} is not one of T1..T4")
    label = "bot"
    return Abst(label, BOTTOM, absorb(tid, formula, Hyp(label)))


def from_translated_bottom(tid: TranslationId, formula: Formula) -> ProofTerm:
    """ML proof of ``T(false) -> T(formula)``: the translated ex falso axiom."""
    tb = leivant_translate(tid, BOTTOM)
    if tid in (T.T1, T.T4):
        body = Case(Hyp("z"), "bl", absorb(tid, formula, Hyp("bl")),
                    "br", absorb(tid, formula, Hyp("br")))
    else:
        # T2 and T3 both turn false into (false -> false) -> false
        b = Apply(Hyp("z"), Abst("y", BOTTOM, Hyp("y")))
        body = Apply(Abst("bot", BOTTOM, absorb(tid, formula, Hyp("bot"))), b)
    return Abst("z", tb, body)


# ------------------------------------------------------------- T1 .. T4

def _variant_of(tid: TranslationId) -> TranslationId:
    return {T.T1: T.K1, T.T2: T.K2, T.T3: T.K3, T.T4: T.K4}[tid]


def equiv_leivant(tid: TranslationId, formula: Formula) -> Equiv:
    """Inner-level equivalence driving the induction.

    T1-T3: ``T(A°) <-> A_Ki``; T4: ``T4(A°) <-> A_K4 | false`` (the
    translated atoms carry an extra ``| false`` that only disappears under
    the outer double negation).
    """
    variant = _variant_of(tid)
    t4 = tid is T.T4

    def left_of(f):
        return leivant_translate(tid, _k(f))

    def right_of(f):
        r = inner_translate(variant, f)
        return Disj(r, BOTTOM) if t4 else r

    def go(f: Formula) -> Equiv:
        left, right = left_of(f), right_of(f)
        if isinstance(f, (Atom, Bottom)):
            if not alpha_equal(left, right):
                raise AssertionError("atomic clauses should coincide")
            return identity_equiv(left, right)
        if isinstance(f, (Conj, Disj, Impl)):
            ea, eb = go(f.left), go(f.right)
            return _bridge_ih(left, right, [(ea, inner_translate(variant, f.left)),
                                            (eb, inner_translate(variant, f.right))], t4)
        x = f.variable
        e = go(f.body)
        core = inner_translate(variant, f.body)
        if isinstance(f, Exists):
            ex = exists_congr_equiv(x, e)
            if not t4:
                return ex
            dist = exists_or_bottom(x, core)
            return bridge_equiv(left, right, (ex, dist), opaque=[Exists(x, core)])
        # forall: the body carries a double negation on both sides
        body_l = leivant_translate(tid, neg(neg(_k(f.body))))
        body_r = neg(neg(core))
        inner = _bridge_ih(body_l, body_r, [(e, core)], t4)
        fa = forall_congr_equiv(x, inner)
        if not t4:
            return fa
        absorb_all = Abst("bot", BOTTOM, Gen(x, absorb(tid, neg(neg(_k(f.body))), Hyp("bot"))))
        return bridge_equiv(left, right, (fa,),
                            extra_facts=[(Impl(BOTTOM, fa.left), absorb_all)])

    return go(formula)


def synthesize_equiv_leivant(tid: TranslationId, formula: Formula) -> ProofTerm:
    """ML proof of ``T(K A) <-> Ki A`` as a conjunction of implications."""
    if tid not in LEIVANT:
        raise ValueError(f"{tid} is not one of T1..T4")
    return equiv_leivant_outer(tid, formula).as_conjunction()


def equiv_leivant_outer(tid: TranslationId, formula: Formula) -> Equiv:
    e = equiv_leivant(tid, formula)
    variant = _variant_of(tid)
    left = leivant_translate(tid, translate(T.K, formula))
    right = translate(variant, formula)
    return _bridge_ih(left, right, [(e, inner_translate(variant, formula))], tid is T.T4)


def _bridge_ih(left, right, hyps, t4: bool) -> Equiv:
    """Bridge from induction hypotheses ``(Equiv, core)``. Under T4 the right
    side of an IH is ``core | false``, so only core and the left side stay opaque."""
    if not t4:
        return bridge_equiv(left, right, [e for e, _ in hyps], opaque=[c for _, c in hyps])
    opaque = [c for _, c in hyps] + [e.left for e, _ in hyps if not alpha_equal(e.left, e.right)]
    return bridge_equiv(left, right, [e for e, _ in hyps], opaque=opaque, opaque_facts=False)


# ------------------------------------------------------------------ T5

def synthesize_equiv_shoenfield(formula: Formula, witness: Optional[Formula] = None) -> ProofTerm:
    """ML proof of ``K(T5 A) <-> K5 A``."""
    return equiv_shoenfield(formula, witness).as_conjunction()


def equiv_shoenfield(formula: Formula, witness: Optional[Formula] = None) -> Equiv:
    if witness is None:
        witness = default_witness(formula)
    if free_variables(witness):
        raise ValueError("the T5 witness formula must be closed")
    wk = _k(witness)

    def x_of(f):
        return _k(shoenfield_translate(f, witness))

    def y_of(f):
        return inner_translate(T.K5, f)

    # invariant: ~X(A) <-> ~Y(A)
    def go(f: Formula) -> Equiv:
        X, Y = x_of(f), y_of(f)
        left, right = neg(X), neg(Y)
        if isinstance(f, Atom):
            return identity_equiv(left, right)
        if isinstance(f, Bottom):
            return bridge_equiv(left, right, (), opaque=[wk])
        if isinstance(f, (Conj, Disj, Impl)):
            ea, eb = go(f.left), go(f.right)
            pieces = [x_of(f.left), y_of(f.left), x_of(f.right), y_of(f.right)]
            return bridge_equiv(left, right, (ea, eb), opaque=pieces, opaque_facts=False)
        x = f.variable
        e = go(f.body)
        xa, ya = x_of(f.body), y_of(f.body)
        if isinstance(f, Exists):
            fa = forall_congr_equiv(x, e)  # forall x.~Xa <-> forall x.~Ya
            l1 = not_exists_forall_not(x, xa)
            l2 = not_exists_forall_not(x, ya)
            return bridge_equiv(left, right, (fa, l1, l2),
                                opaque=[Exists(x, xa), Exists(x, ya)])
        inner = bridge_equiv(neg(neg(xa)), neg(neg(ya)), (e,), opaque=[xa, ya], opaque_facts=False)
        fa = forall_congr_equiv(x, inner)
        l1 = not_exists_forall_not(x, neg(xa))
        return bridge_equiv(left, right, (fa, l1), opaque=[Exists(x, neg(xa))])

    e = go(formula)
    X, Y = x_of(formula), y_of(formula)
    return bridge_equiv(neg(neg(X)), neg(neg(Y)), (e,), opaque=[X, Y], opaque_facts=False)


# ---------------------------------------------------------------- K7, K8

def synthesize_equiv_k678(tid: TranslationId, formula: Formula) -> ProofTerm:
    """ML proof of ``A_K6 <-> A_Kj`` for j = 7, 8 (inner translations)."""
    return equiv_k678(tid, formula).as_conjunction()


def equiv_k678(tid: TranslationId, formula: Formula) -> Equiv:
    if tid not in (T.K7, T.K8):
        raise ValueError(f"{tid} is not K7 or K8")

    def go(f: Formula) -> Equiv:
        left, right = inner_translate(T.K6, f), inner_translate(tid, f)
        if isinstance(f, (Atom, Bottom)):
            return identity_equiv(left, right)
        if isinstance(f, (Conj, Disj, Impl)):
            return bridge_equiv(left, right, (go(f.left), go(f.right)))
        e = go(f.body)
        if isinstance(f, Exists):
            return exists_congr_equiv(f.variable, e)
        inner = bridge_equiv(neg(neg(e.left)), neg(neg(e.right)), (e,))
        return forall_congr_equiv(f.variable, inner)

    return go(formula)
