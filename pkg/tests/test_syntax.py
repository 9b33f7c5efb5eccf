import pytest
from hypothesis import given
from strategies import first_order, propositional, terms

from kuroda.syntax import (
    BOTTOM, App, ArityError, Atom, Conj, Disj, Exists, Forall, Impl, ParseError, Sequent, Var,
    alpha_equal, depth, free_variables, in_clprime_fragment, neg, parse, render, substitute,
)
from kuroda.translations import shoenfield_translate

P, Q, R = Atom("P"), Atom("Q"), Atom("R")


def px(*names):
    return Atom("P", tuple(Var(n) for n in names))


class TestParse:
    def test_precedence(self):
        assert parse("P -> Q | R") == Impl(P, Disj(Q, R))
        assert parse("P & Q | R") == Disj(Conj(P, Q), R)
        assert parse("~P & Q") == Conj(neg(P), Q)

    def test_implication_is_right_associative(self):
        assert parse("P -> Q -> R") == Impl(P, Impl(Q, R))

    def test_negation_is_sugar(self):
        assert parse("~P") == Impl(P, BOTTOM)
        assert parse("false") == BOTTOM

    def test_quantifier_extends_right(self):
        assert parse("forall x. P(x) -> Q") == Forall("x", Impl(px("x"), Q))
        assert parse("(forall x. P(x)) -> Q") == Impl(Forall("x", px("x")), Q)

    def test_unicode_aliases(self):
        assert parse("∀x. ¬P(x) ∨ ⊥") == parse("forall x. ~P(x) | false")
        assert parse("P ∧ Q → R") == parse("P & Q -> R")

    def test_terms(self):
        f = parse("Q(x, f(y))")
        assert f == Atom("Q", (Var("x"), App("f", (Var("y"),))))

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as info:
            parse("P &\n  )")
        assert (info.value.line, info.value.column) == (2, 3)

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            parse("P(x) & P(x, y)")
        with pytest.raises(ArityError):
            parse("Q(f(x), f(x, y))")

    @pytest.mark.parametrize("text", ["", "P Q", "forall . P", "P ->", "(P", "P)", "1P"])
    def test_rejects_garbage(self, text):
        with pytest.raises(ParseError):
            parse(text)


class TestRender:
    def test_negation_sugar(self):
        assert render(Impl(P, BOTTOM)) == "~P"
        assert render(Impl(P, BOTTOM), "unicode") == "¬P"

    def test_bottom(self):
        assert render(Disj(P, BOTTOM)) == "P | false"

    def test_quantified_double_negation(self):
        assert render(Forall("x", neg(neg(px("x"))))) == "forall x. ~~P(x)"

    def test_quantifier_in_antecedent_is_bracketed(self):
        f = Impl(Forall("x", px("x")), Q)
        assert parse(render(f)) == f

    def test_unknown_style(self):
        with pytest.raises(ValueError):
            render(P, "latex")

    @given(first_order)
    def test_round_trip(self, f):
        assert parse(render(f)) == f
        assert parse(render(f, "unicode")) == f


class TestSubstitute:
    def test_free_occurrence(self):
        f = substitute(px("x"), "x", App("f", (Var("y"),)))
        assert f == Atom("P", (App("f", (Var("y"),)),))

    def test_bound_occurrence_untouched(self):
        f = Forall("x", px("x"))
        assert substitute(f, "x", App("c", ())) == f

    def test_capture_avoidance(self):
        out = substitute(Forall("y", px("x", "y")), "x", Var("y"))
        assert isinstance(out, Forall) and out.variable != "y"
        assert out.body == px("y", out.variable)
        assert alpha_equal(out, parse("forall z. P(y, z)"))

    @given(first_order, terms)
    def test_free_variables_after_substitution(self, f, t):
        out = substitute(f, "x", t)
        expected = free_variables(f) - {"x"}
        if "x" in free_variables(f):
            expected |= {v.name for v in _vars(t)}
        assert free_variables(out) == expected


def _vars(t):
    if isinstance(t, Var):
        return {t}
    return set().union(*(_vars(a) for a in t.args)) if t.args else set()


class TestFreeVariables:
    def test_examples(self):
        assert free_variables(px("x")) == {"x"}
        assert free_variables(Forall("x", px("x"))) == set()
        f = Impl(px("x"), Exists("y", Atom("Q", (Var("x"), Var("y")))))
        assert free_variables(f) == {"x"}


class TestFragment:
    def test_examples(self):
        assert in_clprime_fragment(parse("~P | Q"))
        assert not in_clprime_fragment(parse("P & Q"))

    def test_shoenfield_conjunction_lands_in_fragment(self):
        out = shoenfield_translate(parse("P & Q"), Atom("C0"))
        assert out == parse("~(~P | ~Q)")
        assert in_clprime_fragment(out)

    @given(first_order)
    def test_shoenfield_output_always_in_fragment(self, f):
        assert in_clprime_fragment(shoenfield_translate(f, Atom("C0")))


class TestMisc:
    def test_alpha_equal(self):
        assert alpha_equal(parse("forall x. P(x)"), parse("forall y. P(y)"))
        assert not alpha_equal(parse("forall x. P(x)"), parse("forall y. P(x)"))

    def test_depth(self):
        assert depth(P) == 1
        assert depth(parse("P -> Q & R")) == 3

    def test_sequent_labels_distinct(self):
        with pytest.raises(ValueError):
            Sequent((("h", P), ("h", Q)), R)

    def test_sequent_as_formula(self):
        s = Sequent((("a", P), ("b", Q)), R)
        assert s.as_formula() == parse("P -> Q -> R")

    @given(propositional)
    def test_iff_sugar_parses(self, f):
        assert parse(f"({render(f)}) <-> P") == Conj(Impl(f, P), Impl(P, f))
