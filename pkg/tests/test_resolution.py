import pytest
from hypothesis import given

from ncgrowth import groebner as gbm
from ncgrowth import resolution as res
from ncgrowth.catalog import free, projective_line, xx_algebra, yx_algebra

from strategies import monomial_presentations


def test_free_algebra_betti():
    t = res.trivial_betti(free(3), 3, 5)
    assert t.entries == {(0, 0): 1, (1, 1): 3}
    assert t.minimal_certified


def test_xx_has_infinite_global_dimension():
    t = res.trivial_betti(xx_algebra(), 4, 6)
    assert [t.total(i) for i in range(5)] == [1, 2, 1, 1, 1]
    with pytest.raises(res.InfiniteGlobalDimension):
        res.global_dimension(xx_algebra(), guard=6)


def test_yx_global_dimension():
    assert res.global_dimension(yx_algebra()) == 2


def test_projective_line_is_koszul_like():
    gb = gbm.buchberger_truncated(projective_line(2), 8)
    t = res.trivial_betti(gb, 3, 6)
    assert t.entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert t.band_ok


@given(monomial_presentations(vmax=3, amax=4, lmax=3))
def test_anick_matches_linear_algebra(mp):
    kb = res.anick_betti(mp, 3)
    jm = min(kb.D(3) + 1, 7)
    lin = res.trivial_betti(mp, 3, jm)
    assert lin.entries == {k: v for k, v in kb.entries.items() if k[1] <= jm}


@given(monomial_presentations(vmax=3, amax=4, lmax=3))
def test_euler_identity(mp):
    assert res.euler_identity_defect(mp, 8) == []


@given(monomial_presentations(vmax=2, amax=3, lmax=3))
def test_truncation_classes_match_direct(mp):
    for n in range(3):
        a = res.truncation_betti(mp, n, 2, 3)
        b = res.truncation_betti(mp, n, 2, 3, direct=True)
        assert a.entries == b.entries


@given(monomial_presentations(vmax=3, amax=4, lmax=3))
def test_betti_inequality_random(mp):
    for n in range(4):
        assert all(r.holds for r in res.check_betti_inequality(mp, n, 3))


def test_associativity():
    gb = gbm.buchberger_truncated(projective_line(3), 6)
    assert res.algebra_tables(gb, 5).associativity_defects(5) == 0


def test_tower_bound_free():
    tb = res.tower_bound(free(2), 5, t_grid=(0.0, -1.0, 1.0))
    assert tb.gl_dim == 1 and tb.betti == (1,)
    assert tb.values[0.0] == tb.window
    assert tb.values[1.0] > tb.values[0.0] > tb.values[-1.0]


def test_ext_distance():
    eo, eg = res.ext_distance_regular([1, 2, 4, 8, 16], 2, 2)
    assert eo.total == 4 and eg.total == 2 + 2 * 4 + 8
    assert eo(3.0) == 4
    with pytest.raises(res.ResolutionError):
        res.ext_distance_regular([1, 2], 3, 1)


def test_betti_table_exports():
    t = res.trivial_betti(yx_algebra(), 3, 4)
    assert t.csv().splitlines()[0] == "i,j,b_ij"
    assert '"entries"' in t.to_json() or '"b"' in t.to_json()
