from fractions import Fraction

import pytest
from hypothesis import given

from ncgrowth.catalog import (builtin_presentation, example52, free,
                              projective_line, xx_algebra)
from ncgrowth.model import GradedPresentation, MonomialPresentation
from ncgrowth.parser import (ParseError, parse_presentation, serialize,
                             to_dict, to_json)

from strategies import monomial_presentations


def test_monomial_detection():
    p = parse_presentation("vertices v; arrows x:v->v@1, y:v->v@1; relations x.x;")
    assert isinstance(p, MonomialPresentation)
    assert p.relation_words == ((0, 0),)


def test_graded_with_rational_coefficients():
    p = parse_presentation("vertices v; arrows x:v->v@1, y:v->v@1;\n"
                           "relations x.y - 1/2*y.x;")
    assert isinstance(p, GradedPresentation)
    (rel,) = p.relations
    assert sorted(rel.terms.values()) == [Fraction(-1, 2), 1]


def test_comments_and_multiline():
    text = "# header\nvertices v, w;  # two\narrows\n  a:v->w@1,\n  b:w->v@1;\nrelations a.b;\n"
    p = parse_presentation(text)
    assert p.quiver.vertices == ("v", "w")
    assert len(p.quiver.arrows) == 2


@pytest.mark.parametrize("text, line", [
    ("vertices v;\narrows x:v->w@1;", 2),
    ("vertices v;\narrows x:v->v@1;\nrelations x.x.;", 3),
    ("vertices v, v;", 1),
    ("vertices v;\narrows x:v->v@1, y:v->v@1;\nrelations x.y - x.y;", 3),
    ("vertices v;\narrows x:v->v@1;\nrelations x;", 3),
])
def test_errors_carry_position(text, line):
    with pytest.raises(ParseError) as exc:
        parse_presentation(text)
    assert exc.value.line == line


def test_non_composable_relation():
    with pytest.raises(ParseError):
        parse_presentation("vertices v, w; arrows a:v->w@1; relations a.a;")


@pytest.mark.parametrize("pres", [free(2), xx_algebra(), example52(),
                                  projective_line(3), builtin_presentation("preprojective")])
def test_roundtrip_named(pres):
    again = parse_presentation(serialize(pres))
    assert to_dict(again) == to_dict(pres)
    assert to_json(again) == to_json(pres)


@given(monomial_presentations())
def test_roundtrip_random(mp):
    assert to_dict(parse_presentation(serialize(mp))) == to_dict(mp)


def test_reduced_drops_redundant_relations():
    p = parse_presentation("vertices v; arrows x:v->v@1; relations x.x, x.x.x;")
    assert p.relation_words == ((0, 0),)
