import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncgrowth import groebner as gbm
from ncgrowth.automaton import build_ufnarovski, count_normal_words
from ncgrowth.catalog import builtin_presentation, projective_line
from ncgrowth.parser import parse_presentation

from strategies import monomial_presentations

PLANE = "vertices v; arrows x:v->v@1, y:v->v@1; relations x.y - y.x;"


def test_order_prefers_earlier_arrows():
    q = projective_line(2).quiver
    order = gbm.TermOrder(q)
    assert order.key((0, 0)) > order.key((0, 1)) > order.key((1, 1))
    assert order.key((1,)) < order.key((1, 1))


def test_commutative_plane():
    gb = gbm.buchberger_truncated(parse_presentation(PLANE), 10)
    assert gb.complete and len(gb.elements) == 1
    assert gbm.dims_from_gb(gb, 10) == list(range(1, 12))


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_projective_line_dims_match_bruteforce(g):
    pres = projective_line(g)
    gb = gbm.buchberger_truncated(pres, 8)
    top = 6 if g <= 3 else 4
    assert gbm.dims_from_gb(gb, top) == gbm.dims_bruteforce(pres, top)


def test_projective_line3_fibonacci_type():
    gb = gbm.buchberger_truncated(projective_line(3), 10)
    a = gbm.dims_from_gb(gb, 10)
    assert a[:6] == [1, 3, 8, 21, 55, 144]


def test_normal_form_is_order_independent():
    gb = gbm.buchberger_truncated(projective_line(3), 8)
    q = gb.quiver
    rng = random.Random(1)
    for _ in range(30):
        w = tuple(rng.randrange(3) for _ in range(rng.randint(2, 6)))
        p = {w: Fraction(1)}
        forms = {tuple(sorted(gbm.reduce_normal_form(p, gb, random.Random(s)).items()))
                 for s in range(5)}
        assert len(forms) == 1


def test_normal_form_of_relation_is_zero():
    gb = gbm.buchberger_truncated(projective_line(2), 6)
    f = gb.element_dicts()[0]
    assert gbm.reduce_normal_form(f, gb) == {}


@given(monomial_presentations())
def test_monomial_dims_agree_with_automaton(mp):
    gb = gbm.monomial_gb(mp)
    auto = [c.total for c in count_normal_words(build_ufnarovski(mp), 9)]
    assert gbm.dims_from_gb(gb, 9) == auto


@given(st.integers(0, 200))
def test_random_binomial_ideal_dims(seed):
    rng = random.Random(seed)
    text = "vertices v; arrows x:v->v@1, y:v->v@1; relations "
    words = ["x.x", "x.y", "y.x", "y.y"]
    a, b = rng.sample(words, 2)
    text += rng.choice([f"{a} - {b};", f"{a} + {b};", f"{a} - 2*{b};"])
    pres = parse_presentation(text)
    gb = gbm.buchberger_truncated(pres, 7)
    assert gbm.dims_from_gb(gb, 6) == gbm.dims_bruteforce(pres, 6)


def test_preprojective_low_degrees():
    pres = builtin_presentation("preprojective")
    gb = gbm.buchberger_truncated(pres, 5)
    assert gbm.dims_from_gb(gb, 4) == gbm.dims_bruteforce(pres, 4)


def test_truncated_certificate():
    gb = gbm.buchberger_truncated(projective_line(3), 2)
    cert = gb.certification()
    assert cert["degree_bound"] == 2
    assert gb.certified_degree() in (2, float("inf"))
    assert '"certification"' in gb.to_json()


def test_dims_bruteforce_guard():
    with pytest.raises(Exception):
        gbm.dims_bruteforce(projective_line(2), 30)
