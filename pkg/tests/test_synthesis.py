import pytest
from hypothesis import given, settings
from strategies import first_order, propositional

from kuroda.corpus import load_corpus
from kuroda.proofs.checker import check_proof, uses_rule
from kuroda.proofs.lemmas import bridge, library
from kuroda.proofs.sexpr import read_proof
from kuroda.proofs.synthesis import (
    from_translated_bottom, synthesize_absorption, synthesize_equiv_k678,
    synthesize_equiv_leivant, synthesize_equiv_shoenfield,
)
from kuroda.proofs.terms import Abst, DoubleNegElim, ExFalso, Hyp
from kuroda.proofs.transform import (
    TransformError, kuroda_transform, leivant_transform, soundness_pipeline, translated_sequent,
)
from kuroda.provers.g4ip import Decision, decide
from kuroda.syntax import (
    BOTTOM, Atom, Impl, LogicId, Sequent, iff, is_quantifier_free, neg, parse,
)
from kuroda.translations import (
    TranslationId as T, default_witness, inner_translate, leivant_translate,
    shoenfield_translate, translate,
)

ML, IL, CL = LogicId.ML, LogicId.IL, LogicId.CL
P = Atom("P")
PAIRS = {T.T1: T.K1, T.T2: T.K2, T.T3: T.K3, T.T4: T.K4}


def accepted_ml(proof, goal):
    """Checker verdict, cross-checked against the ML prover when it applies."""
    ok = bool(check_proof(proof, Sequent((), goal), ML))
    if ok and is_quantifier_free(goal):
        assert decide(ML, goal) is Decision.PROVABLE
    return ok


class TestLibrary:
    @pytest.mark.parametrize("name", sorted(library()))
    def test_entry_checks_in_minimal_logic(self, name):
        formula, proof = library()[name]
        assert check_proof(proof, Sequent((), formula), ML)
        assert not uses_rule(proof, ExFalso)

    def test_bridge_uses_facts(self):
        b = parse("Q & P")
        fact = parse("R -> P & Q")
        proof = bridge(Impl(Atom("R"), b), [(fact, Hyp("f"))])
        assert check_proof(proof, Sequent((("f", fact),), Impl(Atom("R"), b)), ML)


class TestAbsorption:
    def test_examples(self):
        for tid, text in ((T.T1, "P"), (T.T2, "P"), (T.T4, "P -> Q")):
            goal = Impl(BOTTOM, leivant_translate(tid, parse(text)))
            assert accepted_ml(synthesize_absorption(tid, parse(text)), goal)
        assert leivant_translate(T.T4, parse("P -> Q")) == \
            parse("(P | false) -> ((Q | false) | false)")

    @pytest.mark.parametrize("tid", list(PAIRS))
    @given(f=first_order)
    @settings(max_examples=25)
    def test_random(self, tid, f):
        goal = Impl(BOTTOM, leivant_translate(tid, f))
        assert accepted_ml(synthesize_absorption(tid, f), goal)
        goal = Impl(leivant_translate(tid, BOTTOM), leivant_translate(tid, f))
        assert accepted_ml(from_translated_bottom(tid, f), goal)

    def test_rejects_kuroda_ids(self):
        with pytest.raises(ValueError):
            synthesize_absorption(T.K1, P)


class TestEquivalences:
    @pytest.mark.parametrize("tid,text", [(T.T1, "P"), (T.T3, "P -> Q"), (T.T4, "~(P | Q)")])
    def test_leivant_examples(self, tid, text):
        a = parse(text)
        goal = iff(leivant_translate(tid, translate(T.K, a)), translate(PAIRS[tid], a))
        assert accepted_ml(synthesize_equiv_leivant(tid, a), goal)

    @pytest.mark.parametrize("tid", list(PAIRS))
    @given(f=first_order)
    @settings(max_examples=20)
    def test_leivant_random(self, tid, f):
        goal = iff(leivant_translate(tid, translate(T.K, f)), translate(PAIRS[tid], f))
        assert accepted_ml(synthesize_equiv_leivant(tid, f), goal)

    def test_shoenfield_implication(self):
        a = parse("P -> Q")
        goal = iff(translate(T.K, shoenfield_translate(a, Atom("C0"))), translate(T.K5, a))
        assert accepted_ml(synthesize_equiv_shoenfield(a, Atom("C0")), goal)

    @given(first_order)
    @settings(max_examples=30)
    def test_shoenfield_random(self, f):
        c = default_witness(f)
        goal = iff(translate(T.K, shoenfield_translate(f, c)), translate(T.K5, f))
        assert accepted_ml(synthesize_equiv_shoenfield(f, c), goal)

    def test_shoenfield_compound_witness(self):
        c = parse("C0 & C1")
        a = parse("false | P")
        goal = iff(translate(T.K, shoenfield_translate(a, c)), translate(T.K5, a))
        assert accepted_ml(synthesize_equiv_shoenfield(a, c), goal)

    def test_shoenfield_open_witness(self):
        with pytest.raises(ValueError):
            synthesize_equiv_shoenfield(P, parse("S(x)"))

    @pytest.mark.parametrize("tid,expected", [(T.K7, "(P -> ~~Q) <-> (~Q -> ~P)"),
                                              (T.K8, "(P -> ~~Q) <-> ~(P & ~Q)")])
    def test_k678_examples(self, tid, expected):
        goal = parse(expected)
        assert goal == iff(inner_translate(T.K6, parse("P -> Q")), inner_translate(tid, parse("P -> Q")))
        assert accepted_ml(synthesize_equiv_k678(tid, parse("P -> Q")), goal)

    @pytest.mark.parametrize("tid", [T.K7, T.K8])
    @given(f=first_order)
    @settings(max_examples=30)
    def test_k678_random(self, tid, f):
        goal = iff(inner_translate(T.K6, f), inner_translate(tid, f))
        assert accepted_ml(synthesize_equiv_k678(tid, f), goal)

    def test_k678_rejects_other_ids(self):
        with pytest.raises(ValueError):
            synthesize_equiv_k678(T.K6, P)


class TestTransforms:
    def test_kuroda_dne(self):
        s = Sequent((), parse("~~P -> P"))
        out = kuroda_transform(Abst("x", neg(neg(P)), DoubleNegElim(Hyp("x"))), s)
        assert check_proof(out, Sequent((), parse("~~(~~P -> P)")), IL)
        assert check_proof(out, translated_sequent(T.K, s), IL)
        assert not uses_rule(out, DoubleNegElim)

    def test_kuroda_identity(self):
        s = Sequent((), parse("P -> P"))
        out = kuroda_transform(Abst("x", P, Hyp("x")), s)
        assert check_proof(out, Sequent((), parse("~~(P -> P)")), IL)

    def test_kuroda_rejects_bad_input(self):
        with pytest.raises(TransformError) as info:
            kuroda_transform(Hyp("x"), Sequent((), P))
        assert not info.value.result

    def test_leivant_t2_ex_falso(self):
        s = Sequent((), parse("false -> P"))
        out = leivant_transform(T.T2, Abst("x", BOTTOM, ExFalso(Hyp("x"), P)), s)
        assert check_proof(out, Sequent((), parse("~~false -> ~~P")), ML)
        assert not uses_rule(out, ExFalso)

    def test_leivant_t1_identity(self):
        s = Sequent((), parse("Q -> Q"))
        out = leivant_transform(T.T1, Abst("x", Atom("Q"), Hyp("x")), s)
        assert check_proof(out, Sequent((), parse("(Q | false) -> (Q | false)")), ML)

    def test_leivant_t3_injection(self):
        _, _, proof = read_proof('(sequent (hyp h "P") "P | Q" il)\n(inl (hyp h) "Q")')
        s = Sequent((("h", P),), parse("P | Q"))
        out = leivant_transform(T.T3, proof, s)
        assert check_proof(out, translated_sequent(T.T3, s), ML)

    def test_leivant_rejects_classical_input(self):
        s = Sequent((), parse("~~P -> P"))
        with pytest.raises(TransformError):
            leivant_transform(T.T1, Abst("x", neg(neg(P)), DoubleNegElim(Hyp("x"))), s)


class TestPipeline:
    def item(self, name):
        return next(i for i in load_corpus() if i.name == name)

    @pytest.mark.parametrize("tid,name", [
        (T.K1, "peirce"),
        (T.K2, "double-negation-elimination"),
        (T.K3, "not-forall-exists-not"),
        (T.K4, "drinker"),
    ])
    def test_examples(self, tid, name):
        item = self.item(name)
        out = soundness_pipeline(tid, item.proof, item.sequent)
        assert check_proof(out, translated_sequent(tid, item.sequent), ML)
        assert not uses_rule(out, ExFalso) and not uses_rule(out, DoubleNegElim)

    @pytest.mark.parametrize("tid", [T.K1, T.K2, T.K3, T.K4])
    def test_whole_corpus(self, tid):
        for item in load_corpus():
            out = soundness_pipeline(tid, item.proof, item.sequent)
            assert check_proof(out, translated_sequent(tid, item.sequent), ML), item.name

    def test_rejects_other_variants(self):
        item = self.item("identity")
        with pytest.raises(ValueError):
            soundness_pipeline(T.K5, item.proof, item.sequent)

    @given(propositional)
    @settings(max_examples=15)
    def test_prover_proofs_through_pipeline(self, f):
        # IL proofs found by the prover are CL proofs too
        from kuroda.provers.g4ip import prove
        proof = prove(IL, f)
        if proof is None:
            return
        s = Sequent((), f)
        for tid in (T.K1, T.K4):
            assert check_proof(soundness_pipeline(tid, proof, s), translated_sequent(tid, s), ML)
