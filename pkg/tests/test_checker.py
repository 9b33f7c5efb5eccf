import pytest
from hypothesis import given
from strategies import propositional

import oracles
from kuroda.corpus import corpus_sources, load_corpus
from kuroda.proofs import checker
from kuroda.proofs.checker import check_proof, infer, uses_rule
from kuroda.proofs.sexpr import (
    ProofFileError, dump_proof, dump_proof_file, parse_proof, read_proof,
)
from kuroda.proofs.terms import (
    Abst, Apply, Case, DoubleNegElim, ExFalso, Gen, Hyp, Inst, InjL, Pair, ProjL, Unpack, Witness,
)
from kuroda.provers.g4ip import prove
from kuroda.syntax import BOTTOM, Atom, LogicId, Sequent, Var, neg, parse

ML, IL, CL = LogicId.ML, LogicId.IL, LogicId.CL
P, Q = Atom("P"), Atom("Q")


def goal(text, *hyps):
    return Sequent(tuple(hyps), parse(text))


class TestExamples:
    def test_identity(self):
        assert check_proof(Abst("x", P, Hyp("x")), goal("P -> P"), ML)

    def test_ex_falso_gates_logic(self):
        t = Abst("x", BOTTOM, ExFalso(Hyp("x"), P))
        res = check_proof(t, goal("false -> P"), ML)
        assert not res and res.reason == checker.RULE_NOT_IN_LOGIC
        assert check_proof(t, goal("false -> P"), IL)
        assert check_proof(t, goal("false -> P"), CL)

    def test_double_negation_introduction(self):
        t = Abst("d", P, Abst("k", neg(P), Apply(Hyp("k"), Hyp("d"))))
        assert check_proof(t, goal("P -> ~~P"), ML)

    def test_double_negation_elimination_only_in_cl(self):
        t = Abst("x", neg(neg(P)), DoubleNegElim(Hyp("x")))
        for logic in (ML, IL):
            assert check_proof(t, goal("~~P -> P"), logic).reason == checker.RULE_NOT_IN_LOGIC
        assert check_proof(t, goal("~~P -> P"), CL)


class TestRejections:
    def test_unknown_hypothesis(self):
        res = check_proof(Hyp("h"), goal("P"), CL)
        assert res.reason == checker.UNKNOWN_HYPOTHESIS

    def test_connective_mismatch(self):
        res = check_proof(ProjL(Hyp("h")), goal("P", ("h", P)), ML)
        assert res.reason == checker.CONNECTIVE_MISMATCH

    def test_formula_mismatch(self):
        t = Abst("f", parse("P -> Q"), Apply(Hyp("f"), Hyp("f")))
        res = check_proof(t, goal("(P -> Q) -> Q"), ML)
        assert res.reason == checker.FORMULA_MISMATCH
        assert res.path == ("lam", "app.arg")

    def test_conclusion_mismatch(self):
        res = check_proof(Abst("x", P, Hyp("x")), goal("Q -> Q"), ML)
        assert res.reason == checker.CONCLUSION_MISMATCH

    def test_case_branches_must_agree(self):
        t = Case(Hyp("d"), "a", InjL(Hyp("a"), Q), "b", Hyp("b"))
        res = check_proof(t, goal("P | Q", ("d", parse("P | Q"))), ML)
        assert not res

    def test_gen_eigenvariable(self):
        t = Gen("x", Hyp("h"))
        res = check_proof(t, goal("forall x. P(x)", ("h", parse("P(x)"))), ML)
        assert res.reason == checker.EIGENVARIABLE

    def test_gen_ignores_unused_hypotheses(self):
        t = Gen("x", Abst("a", parse("P(x)"), Hyp("a")))
        assert check_proof(t, goal("forall x. P(x) -> P(x)", ("h", parse("Q(x)"))), ML)

    def test_unpack_escape(self):
        t = Unpack(Hyp("e"), "y", "u", Hyp("u"))
        res = check_proof(t, goal("P(y)", ("e", parse("exists x. P(x)"))), ML)
        assert res.reason == checker.EIGENVARIABLE

    def test_alpha_equivalent_conclusion(self):
        t = Abst("a", parse("forall x. P(x)"), Hyp("a"))
        assert check_proof(t, goal("(forall x. P(x)) -> forall y. P(y)"), ML)

    def test_quantifier_rules(self):
        t = Abst("a", parse("forall x. P(x)"),
                 Witness(Var("z"), Inst(Hyp("a"), Var("z")), parse("exists x. P(x)")))
        assert check_proof(t, goal("(forall x. P(x)) -> exists x. P(x)"), ML)


class TestLogicInclusion:
    @given(propositional)
    def test_accepted_terms_move_up(self, f):
        for logic in (ML, IL):
            t = prove(logic, f)
            if t is None:
                continue
            order = [ML, IL, CL][[ML, IL, CL].index(logic):]
            for higher in order:
                assert check_proof(t, Sequent((), f), higher)

    @given(propositional)
    def test_checked_proofs_are_tautologies(self, f):
        t = prove(IL, f)
        if t is not None:
            assert check_proof(t, Sequent((), f), IL)
            assert oracles.tautology(f)

    def test_uses_rule(self):
        t = Abst("x", BOTTOM, ExFalso(Hyp("x"), P))
        assert uses_rule(t, ExFalso) and not uses_rule(t, DoubleNegElim)


class TestProofFiles:
    def test_read_header_with_hypotheses(self):
        sequent, logic, proof = read_proof('(sequent (hyp h1 "~~P") "P" cl)\n(dne (hyp h1))')
        assert logic is CL and sequent.hypotheses == (("h1", neg(neg(P))),)
        assert check_proof(proof, sequent, logic)

    @pytest.mark.parametrize("name", sorted(corpus_sources()))
    def test_corpus_round_trip(self, name):
        sequent, logic, proof = read_proof(corpus_sources()[name])
        assert parse_proof(dump_proof(proof)) == proof
        again = read_proof(dump_proof_file(proof, sequent, logic))
        assert again == (sequent, logic, proof)

    @given(propositional)
    def test_prover_terms_round_trip(self, f):
        t = prove(IL, f)
        if t is not None:
            assert parse_proof(dump_proof(t)) == t

    @pytest.mark.parametrize("text", [
        "(lam x)", "(hyp)", "(frob x)", '(lam x "P &" (hyp x))', "(hyp x", "hyp x)",
    ])
    def test_malformed(self, text):
        with pytest.raises(ValueError):
            parse_proof(text)

    def test_missing_header(self):
        with pytest.raises(ProofFileError):
            read_proof("(hyp x)")


def test_corpus_is_classical_and_sized():
    items = load_corpus()
    assert len(items) >= 20
    names = {i.name for i in items}
    assert {"peirce", "double-negation-elimination", "excluded-middle"} <= names
    first_order = [i for i in items if "x" in repr(i.sequent)]
    assert len(first_order) >= 3
    for item in items:
        assert check_proof(item.proof, item.sequent, CL), item.name


def test_infer_returns_formula():
    assert infer(Pair(Hyp("a"), Hyp("a")), {"a": P}, ML) == parse("P & P")
