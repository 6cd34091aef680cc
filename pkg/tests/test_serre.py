import math

import pytest
from hypothesis import given

from ncgrowth import serre
from ncgrowth.automaton import build_ufnarovski, count_normal_words
from ncgrowth.catalog import example52, free, two_cycle_tail, xx_algebra, yx_algebra
from ncgrowth.growth import classify_growth

from strategies import monomial_presentations


def _brute_rank(g, n, d_max):
    """Direct transcription of the minimisation over shifts."""
    best = None
    for d in range(d_max + 1):
        cur = [c for c in count_normal_words_states(g, n + d)]
        worst = 0
        for top, bot in zip(cur[n + d], cur[d]):
            if bot == 0:
                if top:
                    worst = None
                    break
                continue
            worst = max(worst, math.ceil(top / bot))
        if worst is not None and (best is None or worst < best):
            best = worst
    return best


def count_normal_words_states(g, m):
    rows = [[1] * g.n_states]
    for _ in range(m):
        nxt = [0] * g.n_states
        for u, v, _a in g.transitions:
            nxt[v] += rows[-1][u]
        rows.append(nxt)
    return rows


def test_example52_ranks():
    rs = serre.rank_sequence(build_ufnarovski(example52()), 60)
    assert set(rs.values) == {2}
    assert rs.r(0) == 1


def test_free_ranks_are_powers():
    rs = serre.rank_sequence(build_ufnarovski(free(3)), 30)
    assert list(rs.values) == [3 ** n for n in range(1, 31)]


def test_two_cycle_tail_alternates():
    rs = serre.rank_sequence(build_ufnarovski(two_cycle_tail()), 40)
    assert set(rs.values[10:]) == {1, 2}


@given(monomial_presentations())
def test_rank_against_direct_minimisation(mp):
    g = build_ufnarovski(mp)
    rs = serre.rank_sequence(g, 6)
    for n in range(1, 7):
        assert rs.r(n) == _brute_rank(g, n, serre.default_d_max(g, n))


def test_truncation_decomposition():
    dec = serre.truncation_decomposition(build_ufnarovski(example52()), 3)
    assert dec.multiplicities == {"x": 1, "y": 4}
    assert "P_y^4" in str(dec)


def test_report_exact_zero():
    g = build_ufnarovski(example52())
    rep = serre.serre_entropy_report(serre.rank_sequence(g, 200), classify_growth(g))
    assert rep.hpol_verdict == "exact-0" and rep.bound_C == 2
    assert rep.h_ok and rep.hpol_ok
    assert serre.RANK_LABEL in rep.to_json()


def test_report_exponential():
    g = build_ufnarovski(xx_algebra())
    rep = serre.serre_entropy_report(serre.rank_sequence(g, 60), classify_growth(g))
    assert rep.h_estimate == pytest.approx(math.log((1 + 5 ** 0.5) / 2), abs=0.05)
    assert rep.hpol_ok is None


def test_report_needs_window():
    g = build_ufnarovski(yx_algebra())
    with pytest.raises(serre.SerreError):
        serre.serre_entropy_report(serre.rank_sequence(g, 10), classify_growth(g))


@pytest.mark.parametrize("mp, N", [(two_cycle_tail(), 2), (example52(), 1), (yx_algebra(), 1)])
def test_shift_constant(mp, N):
    assert serre.shift_inequality_constant(build_ufnarovski(mp)) == N


def test_shift_constant_rejects_exponential():
    with pytest.raises(serre.SerreError):
        serre.shift_inequality_constant(build_ufnarovski(xx_algebra()))


def test_rank_validation():
    g = build_ufnarovski(free(2))
    with pytest.raises(serre.SerreError):
        serre.rank_upper(g, -1, 3)
    assert serre.rank_upper(g, 4, 3) == (16, 0)
