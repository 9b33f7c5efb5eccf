import numpy as np
import pytest
from hypothesis import given, settings
from strategies import propositional

import oracles
from kuroda.proofs.checker import check_proof
from kuroda.provers import kernels
from kuroda.provers.g4ip import (
    Decision, QuantifierError, decide, decide_classical_search, prove,
)
from kuroda.provers.semantics import (
    KripkeModel, _upsets, classical_valid, compile_formula, countermodel, eval_model,
    rooted_posets,
)
from kuroda.syntax import BOTTOM, Atom, LogicId, Sequent, iff, neg, parse

ML, IL, CL = LogicId.ML, LogicId.IL, LogicId.CL
PROV, UNPROV = Decision.PROVABLE, Decision.UNPROVABLE
P, Q = Atom("P"), Atom("Q")


class TestDecide:
    @pytest.mark.parametrize("text", [
        "P -> ~~P",
        "~~(P -> ~Q) -> (P -> ~Q)",
        "P | ~~Q -> ~~(P | Q)",
    ])
    def test_minimal_logic_lemmas(self, text):
        assert decide(ML, parse(text)) is PROV

    def test_ex_falso_gap(self):
        f = parse("false -> P")
        assert decide(ML, f) is UNPROV
        assert decide(IL, f) is PROV

    def test_excluded_middle(self):
        f = parse("P | ~P")
        assert decide(CL, f) is PROV
        assert decide(IL, f) is UNPROV

    def test_peirce(self):
        f = parse("((P -> Q) -> P) -> P")
        assert [decide(l, f) for l in (ML, IL, CL)] == [UNPROV, UNPROV, PROV]

    def test_hypotheses(self):
        s = Sequent((("h", parse("~~P")),), P)
        assert decide(IL, s) is UNPROV and decide(CL, s) is PROV

    def test_quantifiers_rejected(self):
        with pytest.raises(QuantifierError):
            decide(IL, parse("forall x. P(x)"))

    @given(propositional)
    def test_proofs_check(self, f):
        for logic in (ML, IL):
            t = prove(logic, f)
            assert (t is not None) == (decide(logic, f) is PROV)
            if t is not None:
                assert check_proof(t, Sequent((), f), logic)

    @given(propositional)
    def test_classical_matches_truth_table(self, f):
        expected = PROV if oracles.tautology(f) else UNPROV
        assert decide(CL, f) is expected
        assert decide_classical_search(f) is expected

    @given(propositional)
    def test_inclusion(self, f):
        ml, il, cl = (decide(l, f) for l in (ML, IL, CL))
        assert not (ml is PROV and il is UNPROV)
        assert not (il is PROV and cl is UNPROV)

    @given(propositional)
    def test_glivenko(self, f):
        assert decide(CL, f) is decide(IL, neg(neg(f)))

    @given(propositional)
    @settings(max_examples=30)
    def test_unprovable_small_formulas_have_small_countermodels(self, f):
        # decide vs. an independent brute-force Kripke search
        for logic, bottom_atom in ((IL, False), (ML, True)):
            if decide(logic, f) is PROV:
                assert not oracles.refutable(f, 2, bottom_atom)


class TestCountermodel:
    def test_stability_two_chain(self):
        f = parse("~~P -> P")
        m = countermodel(ML, f, 2)
        assert len(m.worlds) == 2
        top = [w for w in m.worlds if w != m.root][0]
        assert P in m.valuation[top] and P not in m.valuation[m.root]
        assert not eval_model(m, m.root, f)
        assert oracles.refutable(f, 2, True)

    def test_ex_falso_one_world(self):
        m = countermodel(ML, parse("false -> P"), 1)
        assert m.worlds == (0,)
        assert BOTTOM in m.valuation[0] and P not in m.valuation[0]
        assert countermodel(IL, parse("false -> P"), 4) is None

    def test_tautology_has_none(self):
        assert countermodel(ML, parse("P -> P"), 4) is None

    def test_excluded_middle(self):
        m = countermodel(IL, parse("P | ~P"), 3)
        assert m is not None and len(m.worlds) == 2

    def test_rejects_classical(self):
        with pytest.raises(ValueError):
            countermodel(CL, P)

    @given(propositional)
    @settings(max_examples=40)
    def test_models_refute(self, f):
        for logic in (ML, IL):
            m = countermodel(logic, f, 3)
            if m is not None:
                assert not eval_model(m, m.root, f)
                assert decide(logic, f) is UNPROV
                leq = set(m.order)
                val = {w: set(m.valuation[w]) for w in m.worlds}
                assert not oracles.forces(leq, val, m.root, f)

    @given(propositional)
    @settings(max_examples=30)
    def test_search_is_complete_up_to_bound(self, f):
        for logic, bottom_atom in ((IL, False), (ML, True)):
            found = countermodel(logic, f, 2) is not None
            assert found == oracles.refutable(f, 2, bottom_atom)


class TestEvalModel:
    def chain(self):
        return KripkeModel((0, 1), frozenset({(0, 0), (1, 1), (0, 1)}),
                           {0: frozenset(), 1: frozenset({P})})

    def test_one_world(self):
        m = KripkeModel((0,), frozenset({(0, 0)}), {0: frozenset({P})})
        assert not eval_model(m, 0, parse("P & Q"))
        assert eval_model(m, 0, parse("P -> P"))

    def test_two_chain(self):
        m = self.chain()
        assert eval_model(m, 0, parse("~~P"))
        assert not eval_model(m, 0, P)
        assert not eval_model(m, 0, parse("P | ~P"))

    def test_validation(self):
        with pytest.raises(ValueError):
            KripkeModel((0, 1), frozenset({(0, 0), (1, 1), (0, 1)}),
                        {0: frozenset({P}), 1: frozenset()})
        with pytest.raises(ValueError):
            KripkeModel((0,), frozenset({(0, 0)}), {0: frozenset({BOTTOM})})

    def test_json(self):
        data = self.chain().to_json()
        assert data["root"] == 0 and data["valuation"]["1"] == ["P"]


class TestClassicalValid:
    @pytest.mark.parametrize("text", ["P | ~P", "false -> P", "P <-> ~~(P | false)"])
    def test_valid(self, text):
        assert classical_valid(parse(text))

    def test_invalid(self):
        assert not classical_valid(parse("P -> Q"))

    @given(propositional)
    def test_agrees_with_oracle(self, f):
        assert classical_valid(f) == oracles.tautology(f)


class TestKernels:
    def test_poset_counts(self):
        # rooted posets up to isomorphism: 1, 1, 2, 5
        assert [len(rooted_posets(n)) for n in range(1, 5)] == [1, 1, 2, 5]

    @given(propositional)
    @settings(max_examples=40)
    def test_numba_matches_numpy(self, f):
        if kernels.numba is None:
            pytest.skip("numba not installed")
        ops, a1, a2, atom_list = compile_formula(f, bottom_atom=True)
        n = len(atom_list)
        assert kernels.falsifying_row(ops, a1, a2, n, use_numba=True) == \
            kernels.falsifying_row(ops, a1, a2, n, use_numba=False)
        for up in rooted_posets(3):
            arr, ups = np.array(up, dtype=np.int64), _upsets(up)
            assert kernels.refuting_valuation(ops, a1, a2, n, arr, ups, use_numba=True) == \
                kernels.refuting_valuation(ops, a1, a2, n, arr, ups, use_numba=False)

    def test_env_flag(self, monkeypatch):
        import importlib
        monkeypatch.setenv("KF_NUMBA", "0")
        reloaded = importlib.reload(kernels)
        try:
            assert reloaded.USE_NUMBA is False
        finally:
            monkeypatch.delenv("KF_NUMBA")
            importlib.reload(kernels)


def test_iff_with_translation_is_valid():
    assert classical_valid(iff(P, neg(neg(P))))
