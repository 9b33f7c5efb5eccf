"""Proof transformers: classical proofs to proofs of translated sequents.

``kuroda_transform`` maps a CL proof of ``G1..Gn |- A`` to an IL proof of
``K G1..K Gn |- K A``; ``leivant_transform`` maps IL proofs to ML proofs of
the T1..T4-translated sequent; ``soundness_pipeline`` chains both and closes
the gap to K1..K4 with the synthesized equivalences.

All transformers recurse over the term while re-deriving the type of each
subterm, so the input must already check.
"""

from __future__ import annotations

from ..syntax import (
    BOTTOM, Conj, Disj, Forall, Formula, Impl, LogicId, Sequent, Var, neg, substitute,
)
from ..translations import (
    LEIVANT, TranslationId, inner_translate, leivant_translate, translate,
)
from .checker import check_proof
from .lemmas import dni
from .synthesis import absorb, equiv_leivant_outer, from_translated_bottom
from .terms import (
    Abst, Apply, Case, DoubleNegElim, ExFalso, FreshLabels, Gen, Hyp, InjL, InjR, Inst,
    Pair, ProjL, ProjR, ProofTerm, Unpack, Witness, labels,
)

T = TranslationId

__all__ = [
    "TransformError", "kuroda_transform", "leivant_transform", "soundness_pipeline",
    "translated_sequent",
]

_KURODA_TO_LEIVANT = {T.K1: T.T1, T.K2: T.T2, T.K3: T.T3, T.K4: T.T4}


class TransformError(ValueError):
    """The input proof does not check against the given sequent."""

    def __init__(self, result, logic: LogicId):
        super().__init__(f"input proof rejected under {logic.name}: {result}")
        self.result = result


def translated_sequent(tid: TranslationId, sequent: Sequent) -> Sequent:
    """Hypotheses and conclusion mapped through ``tid`` (labels kept)."""
    if tid in LEIVANT:
        return sequent.map(lambda f: leivant_translate(tid, f))
    return sequent.map(lambda f: translate(tid, f))


def _require(proof, sequent, logic):
    result = check_proof(proof, sequent, logic)
    if not result:
        raise TransformError(result, logic)


def _fresh_for(proof: ProofTerm, sequent: Sequent) -> FreshLabels:
    return FreshLabels(labels(proof) | {label for label, _ in sequent.hypotheses}, "k")


# --------------------------------------------------------------- CL -> IL

def kuroda_transform(proof: ProofTerm, sequent: Sequent) -> ProofTerm:
    """IL proof of ``translate(K, sequent)`` from a CL proof of ``sequent``."""
    _require(proof, sequent, LogicId.CL)
    fresh = _fresh_for(proof, sequent)

    def o(f: Formula) -> Formula:
        return inner_translate(T.K, f)

    def nn(f: Formula) -> Formula:
        return neg(neg(f))

    def go(t: ProofTerm, ctx: dict):
        # returns (proof of nn(o(A)), A) where A is the type of t
        if isinstance(t, Hyp):
            return t, ctx[t.label]

        if isinstance(t, Abst):
            body, b = go(t.body, {**ctx, t.label: t.hypothesis})
            oa, ob = o(t.hypothesis), o(b)
            k, na, a, b0, w = fresh("k"), fresh("na"), fresh("a"), fresh("b"), fresh("w")
            nn_a = Abst(na, neg(oa), Apply(Hyp(k), Abst(a, oa, ExFalso(Apply(Hyp(na), Hyp(a)), ob))))
            not_b = Abst(b0, ob, Apply(Hyp(k), Abst(w, oa, Hyp(b0))))
            out = Abst(k, neg(Impl(oa, ob)),
                       Apply(Apply(Abst(t.label, nn(oa), body), nn_a), not_b))
            return out, Impl(t.hypothesis, b)

        if isinstance(t, Apply):
            fn, fa = go(t.fn, ctx)
            arg, _ = go(t.arg, ctx)
            k, g, a = fresh("k"), fresh("g"), fresh("a")
            out = Abst(k, neg(o(fa.right)), Apply(fn, Abst(g, o(fa), Apply(
                arg, Abst(a, o(fa.left), Apply(Hyp(k), Apply(Hyp(g), Hyp(a))))))))
            return out, fa.right

        if isinstance(t, Pair):
            left, fl = go(t.left, ctx)
            right, fr = go(t.right, ctx)
            c = Conj(fl, fr)
            k, a, b = fresh("k"), fresh("a"), fresh("b")
            out = Abst(k, neg(o(c)), Apply(left, Abst(a, o(fl), Apply(
                right, Abst(b, o(fr), Apply(Hyp(k), Pair(Hyp(a), Hyp(b))))))))
            return out, c

        if isinstance(t, (ProjL, ProjR)):
            inner, c = go(t.proof, ctx)
            part = c.left if isinstance(t, ProjL) else c.right
            k, p = fresh("k"), fresh("p")
            out = Abst(k, neg(o(part)), Apply(inner, Abst(p, o(c), Apply(Hyp(k), type(t)(Hyp(p))))))
            return out, part

        if isinstance(t, (InjL, InjR)):
            inner, a = go(t.proof, ctx)
            d = Disj(a, t.other) if isinstance(t, InjL) else Disj(t.other, a)
            k, u = fresh("k"), fresh("a")
            inj = InjL(Hyp(u), o(t.other)) if isinstance(t, InjL) else InjR(o(t.other), Hyp(u))
            out = Abst(k, neg(o(d)), Apply(inner, Abst(u, o(a), Apply(Hyp(k), inj))))
            return out, d

        if isinstance(t, Case):
            scrut, d = go(t.scrut, ctx)
            left, c = go(t.body_left, {**ctx, t.label_left: d.left})
            right, _ = go(t.body_right, {**ctx, t.label_right: d.right})
            k, e, u, v = fresh("k"), fresh("d"), fresh("u"), fresh("v")

            def branch(label, part, body, h):
                return Apply(Apply(Abst(label, nn(o(part)), body), dni(Hyp(h), o(part), fresh("n"))),
                             Hyp(k))

            out = Abst(k, neg(o(c)), Apply(scrut, Abst(e, o(d), Case(
                Hyp(e), u, branch(t.label_left, d.left, left, u),
                v, branch(t.label_right, d.right, right, v)))))
            return out, c

        if isinstance(t, Gen):
            body, a = go(t.body, ctx)
            f = Forall(t.variable, a)
            k = fresh("k")
            return Abst(k, neg(o(f)), Apply(Hyp(k), Gen(t.variable, body))), f

        if isinstance(t, Inst):
            inner, f = go(t.proof, ctx)
            inst = substitute(f.body, f.variable, t.term)
            k, u = fresh("k"), fresh("u")
            out = Abst(k, neg(o(inst)), Apply(inner, Abst(u, o(f), Apply(Inst(Hyp(u), t.term), Hyp(k)))))
            return out, inst

        if isinstance(t, Witness):
            inner, _ = go(t.proof, ctx)
            k, a = fresh("k"), fresh("a")
            target = o(t.target)
            out = Abst(k, neg(target), Apply(inner, Abst(a, o(substitute(
                t.target.body, t.target.variable, t.term)), Apply(Hyp(k), Witness(t.term, Hyp(a), target)))))
            return out, t.target

        if isinstance(t, Unpack):
            scrut, e = go(t.scrut, ctx)
            inst = substitute(e.body, e.variable, Var(t.variable))
            body, c = go(t.body, {**ctx, t.label: inst})
            k, h, u = fresh("k"), fresh("e"), fresh("u")
            opened = Apply(Apply(Abst(t.label, nn(o(inst)), body), dni(Hyp(u), o(inst), fresh("n"))),
                           Hyp(k))
            out = Abst(k, neg(o(c)), Apply(scrut, Abst(h, o(e), Unpack(Hyp(h), t.variable, u, opened))))
            return out, c

        if isinstance(t, ExFalso):
            inner, _ = go(t.proof, ctx)
            b = fresh("b")
            return ExFalso(Apply(inner, Abst(b, BOTTOM, Hyp(b))), nn(o(t.target))), t.target

        if isinstance(t, DoubleNegElim):
            inner, nna = go(t.proof, ctx)
            a = nna.left.left
            k, f = fresh("k"), fresh("f")
            out = Abst(k, neg(o(a)), Apply(inner, Abst(f, neg(neg(o(a))), Apply(Hyp(f), Hyp(k)))))
            return out, a

        raise TypeError(f"not a proof term: {t!r}")

    out, _ = go(proof, dict(sequent.hypotheses))
    return out


# --------------------------------------------------------- IL -> ML (T1..T4)

def leivant_transform(tid: TranslationId, proof: ProofTerm, sequent: Sequent) -> ProofTerm:
    """ML proof of the ``tid``-translated sequent from an IL proof."""
    if tid not in LEIVANT:
        raise ValueError(f"{tid} is not one of T1..T4")
    _require(proof, sequent, LogicId.IL)
    fresh = _fresh_for(proof, sequent)
    t4 = tid is T.T4

    def tr(f: Formula) -> Formula:
        return leivant_translate(tid, f)

    def go(t: ProofTerm, ctx: dict):
        # returns (translated proof, type of t)
        if isinstance(t, Hyp):
            return t, ctx[t.label]
        if isinstance(t, Abst):
            body, b = go(t.body, {**ctx, t.label: t.hypothesis})
            if t4:
                body = InjL(body, BOTTOM)
            return Abst(t.label, tr(t.hypothesis), body), Impl(t.hypothesis, b)
        if isinstance(t, Apply):
            fn, fa = go(t.fn, ctx)
            arg, _ = go(t.arg, ctx)
            out = Apply(fn, arg)
            if t4:
                u, v = fresh("u"), fresh("v")
                out = Case(out, u, Hyp(u), v, absorb(tid, fa.right, Hyp(v)))
            return out, fa.right
        if isinstance(t, Pair):
            left, a = go(t.left, ctx)
            right, b = go(t.right, ctx)
            return Pair(left, right), Conj(a, b)
        if isinstance(t, (ProjL, ProjR)):
            inner, c = go(t.proof, ctx)
            return type(t)(inner), (c.left if isinstance(t, ProjL) else c.right)
        if isinstance(t, InjL):
            inner, a = go(t.proof, ctx)
            return InjL(inner, tr(t.other)), Disj(a, t.other)
        if isinstance(t, InjR):
            inner, a = go(t.proof, ctx)
            return InjR(tr(t.other), inner), Disj(t.other, a)
        if isinstance(t, Case):
            scrut, d = go(t.scrut, ctx)
            left, c = go(t.body_left, {**ctx, t.label_left: d.left})
            right, _ = go(t.body_right, {**ctx, t.label_right: d.right})
            return Case(scrut, t.label_left, left, t.label_right, right), c
        if isinstance(t, Gen):
            body, a = go(t.body, ctx)
            return Gen(t.variable, body), Forall(t.variable, a)
        if isinstance(t, Inst):
            inner, f = go(t.proof, ctx)
            return Inst(inner, t.term), substitute(f.body, f.variable, t.term)
        if isinstance(t, Witness):
            inner, _ = go(t.proof, ctx)
            return Witness(t.term, inner, tr(t.target)), t.target
        if isinstance(t, Unpack):
            scrut, e = go(t.scrut, ctx)
            inst = substitute(e.body, e.variable, Var(t.variable))
            body, c = go(t.body, {**ctx, t.label: inst})
            return Unpack(scrut, t.variable, t.label, body), c
        if isinstance(t, ExFalso):
            inner, _ = go(t.proof, ctx)
            return Apply(from_translated_bottom(tid, t.target), inner), t.target
        raise TypeError(f"not an intuitionistic proof term: {type(t).__name__}")

    out, _ = go(proof, dict(sequent.hypotheses))
    return out


# ---------------------------------------------------------------- pipeline

def soundness_pipeline(tid: TranslationId, proof: ProofTerm, sequent: Sequent) -> ProofTerm:
    """ML proof of the ``tid``-translated sequent (K1..K4) from a CL proof."""
    if tid not in _KURODA_TO_LEIVANT:
        raise ValueError(f"{tid} is not one of K1..K4")
    leivant = _KURODA_TO_LEIVANT[tid]
    k_sequent = translated_sequent(T.K, sequent)
    il_proof = kuroda_transform(proof, sequent)
    ml_proof = leivant_transform(leivant, il_proof, k_sequent)
    # rebind each hypothesis from its Ki form to its Ti(K) form
    for label, g in reversed(sequent.hypotheses):
        e = equiv_leivant_outer(leivant, g)
        ml_proof = Apply(Abst(label, e.left, ml_proof), Apply(e.bwd, Hyp(label)))
    return Apply(equiv_leivant_outer(leivant, sequent.conclusion).fwd, ml_proof)
