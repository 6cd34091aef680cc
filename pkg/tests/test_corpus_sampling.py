import math

import pytest

from ncgrowth.automaton import EXPONENTIAL, build_ufnarovski, circuit_chain_depth
from ncgrowth.corpus import ENV_VAR, load_corpus, read_annotations, resolve
from ncgrowth.growth import classify_growth
from ncgrowth.groebner import buchberger_truncated, leading_word_model
from ncgrowth.model import MonomialPresentation
from ncgrowth.sampling import BudgetExhausted, random_monomial


def test_annotations_parse():
    ann = read_annotations("#@ growth: exponential\n#@ entropy: 0.5\n#@ global_dimension: inf\n")
    assert ann == {"growth": "exponential", "entropy": 0.5, "global_dimension": math.inf}


def test_corpus_annotations_hold():
    for e in load_corpus():
        pres = e.load()
        if not isinstance(pres, MonomialPresentation):
            if not pres.quiver.is_standard:
                continue
            gb = buchberger_truncated(pres, 12)
            assert gb.complete
            pres = leading_word_model(gb)
        rep = classify_growth(build_ufnarovski(pres), fit_quasi=False)
        ann = e.annotations
        if "growth" in ann:
            assert ann["growth"] == rep.classification, e.name
        if "gk_dim" in ann:
            assert ann["gk_dim"] == rep.gk_dim, e.name
        if "entropy" in ann and rep.entropy is not None:
            assert abs(ann["entropy"] - rep.entropy.value) < 1e-12, e.name


def test_env_var_overrides(tmp_path, monkeypatch):
    (tmp_path / "mine.alg").write_text("#@ growth: polynomial\nvertices v; arrows x:v->v@1;\n")
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert [e.name for e in load_corpus()] == ["mine"]
    assert resolve("mine").name == "mine"


def test_resolve_falls_back_to_corpus_name():
    assert resolve("examples/xx.alg").name == "xx"
    with pytest.raises(FileNotFoundError):
        resolve("no_such_entry")


@pytest.mark.parametrize("seed", range(10))
def test_random_monomial_polynomial(seed):
    mp = random_monomial(seed)
    d = circuit_chain_depth(build_ufnarovski(mp))
    assert d != EXPONENTIAL and d >= 1
    assert random_monomial(seed) == mp


def test_random_monomial_budget():
    with pytest.raises(BudgetExhausted):
        random_monomial(0, vmax=1, amax=1, rmax=0, budget=0)
    with pytest.raises(ValueError):
        random_monomial(0, lmax=1)
