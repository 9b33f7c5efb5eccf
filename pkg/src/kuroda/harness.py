"""Randomized and curated verification suites with JSON reports."""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .corpus import load_corpus
from .generate import GeneratorConfig, random_formula
from .proofs.checker import check_proof
from .proofs.lemmas import SynthesisError
from .proofs.synthesis import (
    synthesize_absorption, synthesize_equiv_k678, synthesize_equiv_leivant,
    synthesize_equiv_shoenfield,
)
from .proofs.transform import TransformError, soundness_pipeline, translated_sequent
from .provers.g4ip import Decision, decide, decide_classical_search
from .provers.semantics import classical_valid, countermodel, eval_model
from .syntax import (
    BOTTOM, Atom, Disj, Impl, LogicId, Sequent, atoms, iff, neg, render, replace_atoms,
)
from .translations import (
    KURODA_VARIANTS, MUTATIONS, TranslationId, default_witness, inner_translate,
    leivant_translate, mutation, shoenfield_translate, translate,
)

T = TranslationId
ML, IL, CL = LogicId.ML, LogicId.IL, LogicId.CL

SUITES = (
    "soundness-derivability", "characterisation", "leivant-equivalence",
    "shoenfield-equivalence", "k678-equivalence", "k6-lemmas", "pipeline", "prover-cross",
)
DEFAULT_VARIANTS = (T.K1, T.K2, T.K3, T.K4, T.K5, T.K6, T.K7, T.K8)
DEFAULT_SAMPLES = 200

_TO_LEIVANT = {T.K1: T.T1, T.K2: T.T2, T.K3: T.T3, T.K4: T.T4}
_PROVER_SUITES = set(SUITES) - {"pipeline"}
_VARIANT_NAMES = {str(t) for t in KURODA_VARIANTS}


@dataclass
class Failure:
    index: int
    formula: str
    expected: str
    actual: str
    variant: Optional[str] = None
    replay: str = ""

    def to_json(self) -> dict:
        out = {"index": self.index, "formula": self.formula,
               "expected": self.expected, "actual": self.actual, "replay": self.replay}
        if self.variant is not None:
            out["variant"] = self.variant
        return out


@dataclass
class SuiteReport:
    suite: str
    variants: list
    samples: int
    seed: int
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    checks: int = 0
    config: dict = field(default_factory=dict)
    mutation: Optional[str] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "variants": list(self.variants),
            "samples": self.samples,
            "seed": self.seed,
            "failures": [f.to_json() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "passed": self.passed,
            "checks": self.checks,
            "config": self.config,
        }
        if self.mutation:
            out["mutation"] = self.mutation
        return out


def _variant_name(tid: TranslationId, bottom_atomic: bool = True) -> str:
    return str(tid) if bottom_atomic else f"{tid}/bottom-not-atomic"


class _Run:
    """Collects checks and failures for one suite execution."""

    def __init__(self, suite, config, samples, mutation_name):
        self.suite = suite
        self.config = config
        self.samples = samples
        self.mutation = mutation_name
        self.failures: list = []
        self.checks = 0

    def replay(self, index: int, variant: Optional[str]) -> str:
        parts = ["kuroda", "verify", "--suite", self.suite, "--seed", str(self.config.seed),
                 "--depth", str(self.config.max_depth), "--only", str(index)]
        tid = (variant or "").split("/")[0]
        if tid in _VARIANT_NAMES:
            parts += ["--variants", tid]
        if self.mutation:
            parts += ["--mutation", self.mutation]
        return " ".join(parts)

    def check(self, ok: bool, index: int, formula, expected, actual, variant=None) -> None:
        self.checks += 1
        if not ok:
            shown = formula if isinstance(formula, str) else render(formula)
            self.failures.append(Failure(index, shown, str(expected), str(actual), variant,
                                         self.replay(index, variant)))


def _decision(d: Decision) -> str:
    return d.value


def _fresh_atom(formula, base: str = "p0") -> Atom:
    names = {a.predicate for a in atoms(formula)}
    name, k = base, 0
    while name in names:
        k += 1
        name = f"{base}_{k}"
    return Atom(name)


# ------------------------------------------------------------------ suites

def _soundness(run: _Run, variants, indices):
    for i in indices:
        a = random_formula(run.config, i)
        cl = decide(CL, a)
        for tid in variants:
            # plain K targets IL; the variants target ML
            target = IL if tid is T.K else ML
            for b_atomic in (True, False):
                got = decide(target, translate(tid, a, bottom_atomic=b_atomic))
                run.check(got == cl, i, a, _decision(cl), _decision(got),
                          _variant_name(tid, b_atomic))


def _characterisation(run: _Run, variants, indices):
    for i in indices:
        a = random_formula(run.config, i)
        for tid in variants:
            for b_atomic in (True, False):
                ok = classical_valid(iff(a, translate(tid, a, bottom_atomic=b_atomic)))
                run.check(ok, i, a, "valid", "valid" if ok else "invalid",
                          _variant_name(tid, b_atomic))


def _leivant(run: _Run, variants, indices):
    for i in indices:
        a = random_formula(run.config, i)
        for tid in variants:
            goal = iff(leivant_translate(_TO_LEIVANT[tid], translate(T.K, a)), translate(tid, a))
            d = decide(ML, goal)
            run.check(d is Decision.PROVABLE, i, a, "provable", _decision(d), str(tid))


def _shoenfield(run: _Run, variants, indices):
    for i in indices:
        a = random_formula(run.config, i)
        c = default_witness(a)
        goal = iff(translate(T.K, shoenfield_translate(a, c)), translate(T.K5, a))
        d = decide(ML, goal)
        run.check(d is Decision.PROVABLE, i, a, "provable", _decision(d), "k5")


def _k678(run: _Run, variants, indices):
    for i in indices:
        a = random_formula(run.config, i)
        for tid in variants:
            d = decide(ML, iff(inner_translate(T.K6, a), inner_translate(tid, a)))
            run.check(d is Decision.PROVABLE, i, a, "provable", _decision(d), str(tid))


def k6_lemma_instances(d, e) -> list:
    """The three minimal-logic lemmas of the K6 case at ``D, E``."""
    return [
        ("double-negation-introduction", Impl(d, neg(neg(d)))),
        ("stable-negated-implication", Impl(neg(neg(Impl(d, neg(e)))), Impl(d, neg(e)))),
        ("disjunction-double-negation", Impl(Disj(d, neg(neg(e))), neg(neg(Disj(d, e))))),
    ]


def _k6_lemmas(run: _Run, variants, indices):
    for i in indices:
        d, e = random_formula(run.config, 2 * i), random_formula(run.config, 2 * i + 1)
        for name, f in k6_lemma_instances(d, e):
            res = decide(ML, f)
            run.check(res is Decision.PROVABLE, i, f, "provable", _decision(res), name)


def _accepted(run: _Run, index, label, variant, build, sequent, logic=ML):
    try:
        proof = build()
        result = check_proof(proof, sequent, logic)
        ok, actual = bool(result), str(result)
    except (SynthesisError, TransformError, AssertionError, ValueError) as exc:
        ok, actual = False, f"error: {exc}"
    run.check(ok, index, label, "accepted", actual, variant)


def _pipeline(run: _Run, variants, indices, include_corpus: bool = True):
    if include_corpus:
        for n, item in enumerate(load_corpus()):
            for tid in variants:
                if tid not in _TO_LEIVANT:
                    continue
                _accepted(run, -1 - n, f"corpus:{item.name}", str(tid),
                          lambda: soundness_pipeline(tid, item.proof, item.sequent),
                          translated_sequent(tid, item.sequent))
    for i in indices:
        a = random_formula(run.config, i)
        for tid in variants:
            if tid in _TO_LEIVANT:
                leiv = _TO_LEIVANT[tid]
                goal = iff(leivant_translate(leiv, translate(T.K, a)), translate(tid, a))
                _accepted(run, i, a, str(tid), lambda: synthesize_equiv_leivant(leiv, a),
                          Sequent((), goal))
                goal = Impl(BOTTOM, leivant_translate(leiv, a))
                _accepted(run, i, a, str(leiv), lambda: synthesize_absorption(leiv, a),
                          Sequent((), goal))
            elif tid is T.K5:
                c = default_witness(a)
                goal = iff(translate(T.K, shoenfield_translate(a, c)), translate(T.K5, a))
                _accepted(run, i, a, "k5", lambda: synthesize_equiv_shoenfield(a, c),
                          Sequent((), goal))
            elif tid in (T.K7, T.K8):
                goal = iff(inner_translate(T.K6, a), inner_translate(tid, a))
                _accepted(run, i, a, str(tid), lambda: synthesize_equiv_k678(tid, a),
                          Sequent((), goal))


def _prover_cross(run: _Run, variants, indices, max_worlds: int = 4):
    for i in indices:
        a = random_formula(run.config, i)
        ml, il, cl = decide(ML, a), decide(IL, a), decide(CL, a)

        positive = replace_atoms(a, {BOTTOM: _fresh_atom(a)})
        il_pos = decide(IL, positive)
        run.check(ml == il_pos, i, a, _decision(ml), _decision(il_pos), "ml-via-fresh-atom")

        gl = decide(IL, neg(neg(a)))
        run.check(cl == gl, i, a, _decision(cl), _decision(gl), "glivenko")

        for logic, d in ((ML, ml), (IL, il)):
            model = countermodel(logic, a, max_worlds)
            name = f"countermodel-{logic.name.lower()}"
            if model is None:
                # no bound-limited model: fine whether or not it is provable,
                # except that small unprovable formulas should have one
                run.check(True, i, a, "", "", name)
                continue
            refuted = not eval_model(model, model.root, a)
            run.check(d is Decision.UNPROVABLE and refuted, i, a,
                      "unprovable and refuted at root",
                      f"{_decision(d)}, refuted={refuted}", name)

        chain = not (ml is Decision.PROVABLE and il is not Decision.PROVABLE) and \
            not (il is Decision.PROVABLE and cl is not Decision.PROVABLE)
        run.check(chain, i, a, "ML <= IL <= CL", f"{ml.value}/{il.value}/{cl.value}",
                  "monotonicity")

        search = decide_classical_search(a)
        run.check(search == cl, i, a, _decision(cl), _decision(search), "cl-agreement")


_RUNNERS = {
    "soundness-derivability": (_soundness, DEFAULT_VARIANTS),
    "characterisation": (_characterisation, DEFAULT_VARIANTS),
    "leivant-equivalence": (_leivant, (T.K1, T.K2, T.K3, T.K4)),
    "shoenfield-equivalence": (_shoenfield, (T.K5,)),
    "k678-equivalence": (_k678, (T.K7, T.K8)),
    "k6-lemmas": (_k6_lemmas, (T.K6,)),
    "pipeline": (_pipeline, DEFAULT_VARIANTS),
    "prover-cross": (_prover_cross, ()),
}


def _parse_variants(variants) -> tuple:
    if variants is None:
        return DEFAULT_VARIANTS
    out = []
    for v in variants:
        tid = v if isinstance(v, TranslationId) else TranslationId.parse(v)
        if tid not in KURODA_VARIANTS:
            raise ValueError(f"{tid} is not a Kuroda variant")
        if tid not in out:
            out.append(tid)
    return tuple(sorted(out, key=lambda t: t.index))


def run_suite(suite_id: str, config: Optional[GeneratorConfig] = None,
              variants: Optional[Iterable] = None, samples: int = DEFAULT_SAMPLES, *,
              mutation_name: Optional[str] = None, only: Optional[int] = None,
              max_worlds: int = 4, include_corpus: bool = True) -> SuiteReport:
    """Run one suite over ``samples`` generated formulas (or just sample
    ``only``) and report every failing check."""
    if suite_id not in _RUNNERS:
        raise ValueError(f"unknown suite {suite_id!r}; choose from {', '.join(SUITES)}")
    if samples < 0:
        raise ValueError("samples must be nonnegative")
    config = config or GeneratorConfig()
    if suite_id in _PROVER_SUITES and not config.quantifier_free:
        raise ValueError(f"suite {suite_id} is prover-based and needs quantifier-free formulas")
    selected = _parse_variants(variants)
    runner, native = _RUNNERS[suite_id]
    covered = tuple(t for t in selected if t in native) if native else ()
    indices = range(samples) if only is None else [only]

    run = _Run(suite_id, config, samples, mutation_name)
    start = time.perf_counter()
    with mutation(mutation_name):
        if suite_id == "prover-cross":
            runner(run, covered, indices, max_worlds)
        elif suite_id == "pipeline":
            runner(run, covered, indices, include_corpus and only is None)
        elif suite_id == "k6-lemmas" or covered:
            runner(run, covered, indices)
    elapsed = (time.perf_counter() - start) * 1000
    run.failures.sort(key=lambda f: (f.index, f.variant or ""))
    return SuiteReport(
        suite=suite_id,
        variants=[str(t) for t in covered],
        samples=len(indices),
        seed=config.seed,
        failures=run.failures,
        elapsed_ms=elapsed,
        checks=run.checks,
        config=config.to_json(),
        mutation=mutation_name,
    )


def run_all(config: Optional[GeneratorConfig] = None, variants=None,
            samples: int = DEFAULT_SAMPLES, **kwargs) -> list:
    return [run_suite(s, config, variants, samples, **kwargs) for s in SUITES]


def mutation_sweep(config: Optional[GeneratorConfig] = None, samples: int = DEFAULT_SAMPLES,
                   names: Optional[Iterable[str]] = None) -> dict:
    """For each mutation, the suites that caught it (stopping at the first)."""
    out = {}
    for name in names or MUTATIONS:
        caught = []
        for suite in SUITES:
            report = run_suite(suite, config, None, samples, mutation_name=name)
            if not report.passed:
                caught.append(suite)
                break
        out[name] = caught
    return out


def default_config(seed: int = 0, max_depth: int = 5, **kwargs) -> GeneratorConfig:
    """The default harness configuration: atoms P, Q, R plus bottom."""
    return replace(GeneratorConfig(), seed=seed, max_depth=max_depth, **kwargs)
