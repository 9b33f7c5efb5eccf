import pytest
from hypothesis import given
from strategies import first_order, propositional

import oracles
from kuroda.syntax import (
    BOTTOM, Atom, Conj, Disj, Exists, Forall, free_variables, iff, neg, parse, render, size,
)
from kuroda.translations import (
    KURODA_VARIANTS, LEIVANT, MUTATIONS, TranslationId as T, active_mutation, apply_translation,
    default_witness, inner_translate, leivant_translate, mutation, shoenfield_translate, translate,
)

C0 = Atom("C0")


def tr(tid, text):
    return render(translate(tid, parse(text)))


class TestKurodaExamples:
    def test_forall_clause(self):
        assert render(inner_translate(T.K, parse("forall x. P(x)"))) == "forall x. ~~P(x)"

    def test_k4_implication(self):
        assert inner_translate(T.K4, parse("P -> Q")) == parse("P -> (Q | false)")

    def test_k8_implication(self):
        assert render(inner_translate(T.K8, parse("P -> Q"))) == "~(P & ~Q)"

    def test_outer_double_negation(self):
        assert tr(T.K, "P") == "~~P"
        assert translate(T.K1, parse("P")) == parse("~~(P | false)")
        assert translate(T.K5, parse("P -> Q")) == parse("~~(~P | Q)")
        assert translate(T.K6, parse("P -> Q")) == parse("~~(P -> ~~Q)")

    def test_k4_leaves_atoms_alone(self):
        assert inner_translate(T.K4, parse("P")) == parse("P")

    def test_rejects_auxiliary_ids(self):
        for tid in (T.T1, T.T5):
            with pytest.raises(ValueError):
                inner_translate(tid, parse("P"))

    def test_bottom_not_atomic_reading(self):
        assert inner_translate(T.K1, BOTTOM, bottom_atomic=False) == BOTTOM
        assert inner_translate(T.K1, BOTTOM) == Disj(BOTTOM, BOTTOM)

    @pytest.mark.parametrize("tid", KURODA_VARIANTS)
    @given(f=first_order)
    def test_matches_clause_table(self, tid, f):
        assert inner_translate(tid, f) == oracles.inner(tid, f)
        assert translate(tid, f) == oracles.outer(tid, f)


class TestLeivantExamples:
    def test_t2_implication(self):
        assert leivant_translate(T.T2, parse("P -> Q")) == parse("~~P -> ~~Q")

    def test_t3_atom(self):
        assert render(leivant_translate(T.T3, parse("P"))) == "(false -> P) -> P"

    def test_t4_implication(self):
        out = leivant_translate(T.T4, parse("P -> Q"))
        assert out == parse("(P | false) -> ((Q | false) | false)")

    @pytest.mark.parametrize("tid", [T.T1, T.T2, T.T3])
    def test_commutes_with_implication(self, tid):
        a, b = parse("P & Q"), parse("exists x. R(x)")
        assert leivant_translate(tid, parse("(P & Q) -> exists x. R(x)")) == \
            parse(f"({render(leivant_translate(tid, a))}) -> ({render(leivant_translate(tid, b))})")


class TestShoenfieldExamples:
    def test_bottom(self):
        assert shoenfield_translate(BOTTOM, C0) == parse("~(~C0 | C0)")

    def test_conjunction(self):
        assert shoenfield_translate(parse("P & Q"), C0) == parse("~(~P | ~Q)")

    def test_forall(self):
        assert shoenfield_translate(parse("forall x. P(x)"), C0) == parse("~exists x. ~P(x)")

    def test_open_witness_rejected(self):
        with pytest.raises(ValueError):
            shoenfield_translate(parse("P"), parse("S(x)"))

    def test_default_witness_is_fresh(self):
        assert default_witness(parse("P")) == C0
        assert default_witness(parse("C0 & C1")) == Atom("C2")


class TestProperties:
    @pytest.mark.parametrize("tid", KURODA_VARIANTS)
    @given(a=first_order, b=first_order)
    def test_commutation(self, tid, a, b):
        ia, ib = inner_translate(tid, a), inner_translate(tid, b)
        assert inner_translate(tid, Conj(a, b)) == Conj(ia, ib)
        assert inner_translate(tid, Disj(a, b)) == Disj(ia, ib)
        assert inner_translate(tid, Exists("x", a)) == Exists("x", ia)
        assert inner_translate(tid, Forall("x", a)) == Forall("x", neg(neg(ia)))

    @given(first_order)
    def test_size_bound(self, f):
        n = size(f)
        for tid in KURODA_VARIANTS:
            assert size(translate(tid, f)) <= 6 * n + 4
        for tid in LEIVANT:
            assert size(leivant_translate(tid, f)) <= 6 * n
        # each bottom becomes ~(~C0 | C0), seven nodes
        assert size(shoenfield_translate(f, C0)) <= 7 * n

    @given(first_order)
    def test_deterministic(self, f):
        for tid in list(KURODA_VARIANTS) + list(LEIVANT):
            assert apply_translation(tid, f) == apply_translation(tid, f)

    @given(first_order)
    def test_translations_preserve_free_variables(self, f):
        for tid in list(KURODA_VARIANTS) + list(LEIVANT) + [T.T5]:
            assert free_variables(apply_translation(tid, f)) == free_variables(f)

    @given(propositional)
    def test_shoenfield_classically_equivalent(self, f):
        assert oracles.tautology(iff(f, shoenfield_translate(f, C0)))

    @given(propositional)
    def test_all_translations_classically_equivalent(self, f):
        for tid in list(KURODA_VARIANTS) + list(LEIVANT):
            assert oracles.tautology(iff(f, apply_translation(tid, f)))


class TestMutations:
    def test_mutation_changes_one_clause(self):
        f = parse("P -> Q")
        plain = translate(T.K4, f)
        with mutation("k4-impl-no-bottom"):
            assert active_mutation() == "k4-impl-no-bottom"
            assert translate(T.K4, f) == parse("~~(P -> Q)")
            assert translate(T.K1, f) == oracles.outer(T.K1, f)
        assert active_mutation() is None
        assert translate(T.K4, f) == plain

    @pytest.mark.parametrize("name", sorted(MUTATIONS))
    def test_every_mutation_is_observable(self, name):
        tid, _, _ = MUTATIONS[name]
        f = parse("(P -> Q) & R")
        with mutation(name):
            mutated = translate(tid, f)
        assert mutated != translate(tid, f)

    def test_unknown_mutation(self):
        with pytest.raises(ValueError):
            with mutation("nope"):
                pass


def test_parse_ids():
    assert T.parse("K3") is T.K3
    with pytest.raises(ValueError):
        T.parse("k9")
