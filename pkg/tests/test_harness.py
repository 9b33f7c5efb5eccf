import json

import pytest

from kuroda.generate import GeneratorConfig
from kuroda.harness import (
    SUITES, k6_lemma_instances, mutation_sweep, run_suite, default_config,
)
from kuroda.provers.g4ip import Decision, decide
from kuroda.syntax import LogicId, parse

SMALL = 30


@pytest.mark.parametrize("suite", SUITES)
def test_suites_pass_small(suite):
    report = run_suite(suite, default_config(seed=3), samples=SMALL)
    assert report.passed, [f.to_json() for f in report.failures[:3]]
    assert report.checks > 0


def test_report_json_shape():
    report = run_suite("characterisation", default_config(), ["k1", "k5"], 10)
    data = json.loads(json.dumps(report.to_json()))
    assert set(data) >= {"suite", "variants", "samples", "seed", "failures", "elapsed_ms",
                         "passed", "checks", "config"}
    assert data["variants"] == ["k1", "k5"]
    assert data["samples"] == 10 and data["passed"]
    # both bottom readings are checked for each variant
    assert data["checks"] == 10 * 2 * 2


def test_reproducible():
    a = run_suite("soundness-derivability", default_config(seed=5), samples=20,
                  mutation_name="k6-impl-no-double-negation")
    b = run_suite("soundness-derivability", default_config(seed=5), samples=20,
                  mutation_name="k6-impl-no-double-negation")
    strip = lambda r: [f.to_json() for f in r.failures]
    assert strip(a) == strip(b) and a.failures


def test_failure_replay_reproduces():
    report = run_suite("soundness-derivability", default_config(seed=5), samples=20,
                       mutation_name="k2-atom-single-negation")
    first = report.failures[0]
    assert "--only" in first.replay and "--mutation k2-atom-single-negation" in first.replay
    again = run_suite("soundness-derivability", default_config(seed=5), [first.variant.split("/")[0]],
                      only=first.index, mutation_name="k2-atom-single-negation")
    assert any(f.formula == first.formula for f in again.failures)


def test_mutation_sweep_catches_everything():
    caught = mutation_sweep(default_config(), samples=60)
    assert all(caught.values()), caught


def test_k6_lemma_instances_are_ml_provable():
    d, e = parse("P | Q"), parse("~R")
    for _, f in k6_lemma_instances(d, e):
        assert decide(LogicId.ML, f) is Decision.PROVABLE


def test_k6_lemma_count():
    report = run_suite("k6-lemmas", default_config(), samples=7)
    assert report.checks == 21


def test_prover_suites_need_quantifier_free():
    with pytest.raises(ValueError):
        run_suite("characterisation", GeneratorConfig(quantifier_free=False), samples=1)


def test_pipeline_accepts_first_order_config():
    report = run_suite("pipeline", GeneratorConfig(quantifier_free=False, max_depth=3), samples=5,
                       include_corpus=False)
    assert report.passed


def test_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("characterisation", variants=["t1"])
    with pytest.raises(ValueError):
        run_suite("characterisation", samples=-1)


def test_variants_outside_suite_are_skipped():
    report = run_suite("k678-equivalence", default_config(), ["k1"], 5)
    assert report.variants == [] and report.checks == 0
