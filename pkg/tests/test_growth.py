import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from ncgrowth import growth as gr
from ncgrowth.automaton import build_ufnarovski, count_normal_words
from ncgrowth.catalog import example52, free, two_cycle_tail, xx_algebra, yx_algebra
from ncgrowth.model import MonomialPresentation, Quiver

from strategies import monomial_presentations

GOLDEN = math.log((1 + math.sqrt(5)) / 2)


def _adjacency_radius(g):
    A = np.zeros((g.n_states, g.n_states))
    for u, v, _ in g.transitions:
        A[u, v] += 1
    return max(abs(np.linalg.eigvals(A))) if g.n_states else 0.0


def test_xx_hilbert_series():
    h = gr.hilbert_series(xx_algebra(), 20)
    assert h.numerator == (1, 1) and h.denominator == (1, -1, -1)
    assert h.series(25)[20:] == [17711, 28657, 46368, 75025, 121393]


def test_hilbert_series_needs_enough_terms():
    with pytest.raises(gr.GrowthError):
        gr.hilbert_series(xx_algebra(), 3)


@given(monomial_presentations())
def test_rational_form_predicts_later_terms(mp):
    g = build_ufnarovski(mp)
    N = 2 * (g.n_states + g.state_len) - 1
    h = gr.hilbert_series(g, N)
    later = [c.total for c in count_normal_words(g, 3 * N + 5)]
    assert h.series(len(later)) == later


def test_entropy_xx_certified():
    ev = gr.growth_entropy(xx_algebra())
    lo, hi = ev.interval
    assert lo <= GOLDEN <= hi and hi - lo < 1e-12
    assert ev.factor == (-1, -1, 1)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_entropy_free(k):
    ev = gr.growth_entropy(free(k))
    assert ev.contains(math.log(k))


def test_entropy_from_hilbert_data_agrees():
    a = gr.growth_entropy(gr.hilbert_series(xx_algebra(), 20))
    b = gr.growth_entropy(xx_algebra())
    assert a.interval[0] <= b.value <= a.interval[1]


@given(monomial_presentations())
def test_entropy_against_numpy(mp):
    g = build_ufnarovski(mp)
    rep = gr.classify_growth(g, fit_quasi=False)
    rho = _adjacency_radius(g)
    if rep.classification == "finite":
        assert rho < 1e-6
    else:
        assert abs(math.exp(rep.entropy.value) - rho) < 1e-6
        assert (rep.classification == "exponential") == (rho > 1 + 1e-9)


def test_finite_dimensional():
    q = Quiver.build(["v"], [("x", "v", "v")])
    mp = MonomialPresentation(q, (q.path("x", "x"),))
    rep = gr.classify_growth(mp)
    assert rep.classification == "finite" and rep.entropy_value == -math.inf
    with pytest.raises(gr.FiniteDimensionalError):
        gr.growth_entropy(mp)


@pytest.mark.parametrize("mp, gk", [(example52(), 2), (yx_algebra(), 2),
                                    (two_cycle_tail(), 1), (free(1), 1)])
def test_polynomial_classification(mp, gk):
    rep = gr.classify_growth(mp)
    assert rep.classification == "polynomial" and rep.gk_dim == gk
    assert rep.entropy.contains(0.0)
    lo, hi = rep.gk_bounds
    D = gk - 1
    for m in range(max(rep.quasi.onset, 1), 200):
        assert lo * m ** D <= rep.dims[m] <= hi * m ** D


def test_two_cycle_tail_is_periodic():
    g = build_ufnarovski(two_cycle_tail())
    seq = [c.counts["u"] for c in count_normal_words(g, 60)]
    qp = gr.quasi_polynomial_fit(seq, g)
    assert qp.period == 2 and qp.shared_degree
    assert all(qp(m) == seq[m] for m in range(qp.onset, 61))


@given(monomial_presentations(polynomial=True))
def test_quasi_polynomial_holdout(mp):
    g = build_ufnarovski(mp)
    rep = gr.classify_growth(g, horizon=150)
    dims = [c.total for c in count_normal_words(g, 300)]
    assert all(rep.quasi(m) == dims[m] for m in range(rep.quasi.onset, 301))


def test_report_json():
    js = gr.classify_growth(xx_algebra()).to_json()
    assert '"classification": "exponential"' in js and '"gk_dim": "inf"' in js


def test_rational_form_rejects_short_input():
    with pytest.raises(gr.GrowthError):
        gr.rational_form([1, 2, 3], 4)
    assert gr.rational_form([1] * 10, 2).denominator == (1, -1)
    assert gr.rational_form([Fraction(1)] * 4, 1).numerator == (1,)
