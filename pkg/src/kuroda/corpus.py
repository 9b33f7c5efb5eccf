"""A curated set of classical proof terms used by the pipeline suite.

Each entry is a proof file (see ``kuroda.proofs.sexpr``); ``load_corpus``
parses them. Every entry checks under CL, and most genuinely need DNE.
"""

from __future__ import annotations

from dataclasses import dataclass

from .proofs.sexpr import read_proof
from .proofs.terms import ProofTerm
from .syntax import LogicId, Sequent


@dataclass(frozen=True)
class CorpusItem:
    name: str
    sequent: Sequent
    logic: LogicId
    proof: ProofTerm
    source: str


_ENTRIES = {
    "identity": '''
(sequent "P -> P" cl)
(lam x "P" (hyp x))''',

    "double-negation-elimination": '''
(sequent "~~P -> P" cl)
(lam x "~~P" (dne (hyp x)))''',

    "excluded-middle": '''
(sequent "P | ~P" cl)
(dne (lam k "~(P | ~P)"
  (app (hyp k) (inr "P" (lam p "P" (app (hyp k) (inl (hyp p) "~P")))))))''',

    "peirce": '''
(sequent "((P -> Q) -> P) -> P" cl)
(lam f "(P -> Q) -> P"
  (dne (lam np "~P"
    (app (hyp np) (app (hyp f) (lam p "P" (efq (app (hyp np) (hyp p)) "Q")))))))''',

    "de-morgan-not-and": '''
(sequent "~(P & Q) -> ~P | ~Q" cl)
(lam h "~(P & Q)" (dne (lam k "~(~P | ~Q)"
  (app (hyp k) (inl (lam p "P"
    (app (hyp k) (inr "~P" (lam q "Q" (app (hyp h) (pair (hyp p) (hyp q)))))))
    "~Q")))))''',

    "de-morgan-not-or": '''
(sequent "~(P | Q) -> ~P & ~Q" cl)
(lam h "~(P | Q)"
  (pair (lam p "P" (app (hyp h) (inl (hyp p) "Q")))
        (lam q "Q" (app (hyp h) (inr "P" (hyp q))))))''',

    "de-morgan-or-not": '''
(sequent "~P | ~Q -> ~(P & Q)" cl)
(lam d "~P | ~Q" (lam c "P & Q"
  (case (hyp d) a (app (hyp a) (fst (hyp c))) b (app (hyp b) (snd (hyp c))))))''',

    "de-morgan-not-and-not": '''
(sequent "~(~P & ~Q) -> P | Q" cl)
(lam h "~(~P & ~Q)" (dne (lam k "~(P | Q)"
  (app (hyp h) (pair (lam p "P" (app (hyp k) (inl (hyp p) "Q")))
                     (lam q "Q" (app (hyp k) (inr "P" (hyp q)))))))))''',

    "contraposition-converse": '''
(sequent "(~Q -> ~P) -> P -> Q" cl)
(lam f "~Q -> ~P" (lam p "P"
  (dne (lam nq "~Q" (app (app (hyp f) (hyp nq)) (hyp p))))))''',

    "implication-as-disjunction": '''
(sequent "(P -> Q) -> ~P | Q" cl)
(lam f "P -> Q" (dne (lam k "~(~P | Q)"
  (app (hyp k) (inl (lam p "P" (app (hyp k) (inr "~P" (app (hyp f) (hyp p))))) "Q")))))''',

    "implication-linear": '''
(sequent "(P -> Q) | (Q -> P)" cl)
(dne (lam k "~((P -> Q) | (Q -> P))"
  (app (hyp k) (inl (lam p "P"
    (efq (app (hyp k) (inr "P -> Q" (lam q "Q" (hyp p)))) "Q"))
    "Q -> P"))))''',

    "ex-falso": '''
(sequent "false -> P" cl)
(lam b "false" (efq (hyp b) "P"))''',

    "stability-hypothesis": '''
(sequent (hyp h "~~P") "P" cl)
(dne (hyp h))''',

    "modus-tollens-hypotheses": '''
(sequent (hyp h1 "P -> Q") (hyp h2 "~Q") "~P" cl)
(lam p "P" (app (hyp h2) (app (hyp h1) (hyp p))))''',

    "consequentia-mirabilis": '''
(sequent "(~P -> P) -> P" cl)
(lam f "~P -> P" (dne (lam np "~P" (app (hyp np) (app (hyp f) (hyp np))))))''',

    "classical-or-elimination": '''
(sequent "((P -> Q) -> Q) -> (Q -> P) -> P" cl)
(lam a "(P -> Q) -> Q" (lam b "Q -> P" (dne (lam np "~P"
  (app (hyp np) (app (hyp b) (app (hyp a)
    (lam p "P" (efq (app (hyp np) (hyp p)) "Q")))))))))''',

    "negated-antecedent-swap": '''
(sequent "(~P -> Q) -> ~Q -> P" cl)
(lam f "~P -> Q" (lam nq "~Q"
  (dne (lam np "~P" (app (hyp nq) (app (hyp f) (hyp np)))))))''',

    "weak-excluded-middle-hypothesis": '''
(sequent (hyp h "P -> Q") (hyp g "~P -> Q") "Q" cl)
(dne (lam nq "~Q"
  (app (hyp nq) (app (hyp g) (lam p "P" (app (hyp nq) (app (hyp h) (hyp p))))))))''',

    "not-forall-exists-not": '''
(sequent "~(forall x. P(x)) -> exists x. ~P(x)" cl)
(lam h "~(forall x. P(x))" (dne (lam k "~exists x. ~P(x)"
  (app (hyp h) (gen x (dne (lam np "~P(x)"
    (app (hyp k) (wit "x" (hyp np) "exists x. ~P(x)")))))))))''',

    "forall-exists": '''
(sequent "(forall x. P(x)) -> exists x. P(x)" cl)
(lam h "forall x. P(x)" (wit "x" (inst (hyp h) "x") "exists x. P(x)"))''',

    "exists-not-not-forall": '''
(sequent "(exists x. ~P(x)) -> ~forall x. P(x)" cl)
(lam e "exists x. ~P(x)" (lam a "forall x. P(x)"
  (unpack (hyp e) y u (app (hyp u) (inst (hyp a) "y")))))''',

    "not-exists-forall-not": '''
(sequent "~(exists x. P(x)) -> forall x. ~P(x)" cl)
(lam n "~exists x. P(x)"
  (gen x (lam p "P(x)" (app (hyp n) (wit "x" (hyp p) "exists x. P(x)")))))''',

    "not-forall-not-exists": '''
(sequent "~(forall x. ~P(x)) -> exists x. P(x)" cl)
(lam h "~forall x. ~P(x)" (dne (lam k "~exists x. P(x)"
  (app (hyp h) (gen x (lam p "P(x)" (app (hyp k) (wit "x" (hyp p) "exists x. P(x)"))))))))''',

    "drinker": '''
(sequent "exists x. (P(x) -> forall y. P(y))" cl)
(dne (lam k "~exists x. (P(x) -> forall y. P(y))"
  (app (hyp k) (wit "x" (lam a "P(x)" (gen y (dne (lam np "~P(y)"
    (app (hyp k) (wit "y" (lam b "P(y)" (efq (app (hyp np) (hyp b)) "forall y. P(y)"))
                      "exists x. (P(x) -> forall y. P(y))"))))))
    "exists x. (P(x) -> forall y. P(y))"))))''',

    "forall-and-split": '''
(sequent "(forall x. P(x) & Q(x)) -> (forall x. P(x)) & forall x. Q(x)" cl)
(lam h "forall x. P(x) & Q(x)"
  (pair (gen x (fst (inst (hyp h) "x"))) (gen x (snd (inst (hyp h) "x")))))''',
}


def corpus_sources() -> dict:
    """Name -> proof file text."""
    return dict(_ENTRIES)


def load_corpus() -> list:
    out = []
    for name, text in _ENTRIES.items():
        sequent, logic, proof = read_proof(text)
        out.append(CorpusItem(name, sequent, logic, proof, text.strip()))
    return out
