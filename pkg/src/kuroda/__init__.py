"""Kuroda's negative translation, its minimal-logic variants K1-K8, and the
machinery to check their soundness: propositional provers for ML, IL and CL,
Kripke countermodels, a proof-term checker and proof transformers."""

from .syntax import (
    BOTTOM, App, Atom, Bottom, Conj, Disj, Exists, Forall, Formula, Impl, LogicId,
    ParseError, Sequent, Var, alpha_equal, free_variables, in_clprime_fragment, neg,
    parse, render, substitute,
)
from .translations import (
    TranslationId, inner_translate, leivant_translate, shoenfield_translate, translate,
)
from .provers.g4ip import Decision, decide, prove
from .provers.semantics import KripkeModel, classical_valid, countermodel, eval_model
from .proofs.checker import CheckResult, check_proof
from .proofs.synthesis import (
    synthesize_absorption, synthesize_equiv_k678, synthesize_equiv_leivant,
    synthesize_equiv_shoenfield,
)
from .proofs.transform import kuroda_transform, leivant_transform, soundness_pipeline
from .generate import GeneratorConfig, random_formula
from .harness import SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BOTTOM", "App", "Atom", "Bottom", "Conj", "Disj", "Exists", "Forall", "Formula", "Impl",
    "LogicId", "ParseError", "Sequent", "Var", "alpha_equal", "free_variables",
    "in_clprime_fragment", "neg", "parse", "render", "substitute",
    "TranslationId", "inner_translate", "leivant_translate", "shoenfield_translate", "translate",
    "Decision", "decide", "prove", "KripkeModel", "classical_valid", "countermodel", "eval_model",
    "CheckResult", "check_proof", "synthesize_absorption", "synthesize_equiv_k678",
    "synthesize_equiv_leivant", "synthesize_equiv_shoenfield", "kuroda_transform",
    "leivant_transform", "soundness_pipeline", "GeneratorConfig", "random_formula",
    "SuiteReport", "run_suite",
]
