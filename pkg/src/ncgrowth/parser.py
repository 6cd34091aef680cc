"""Reading and writing presentation files.

Grammar (``#`` starts a comment, statements end with ``;``)::

    vertices v, w;
    arrows x:v->v@1, y:v->w@1;
    relations x.y, 2*x.x - 1/2*x.x;

A relation is a signed sum of dot-separated paths, each optionally prefixed
by a rational coefficient and ``*``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .model import (Arrow, GradedPresentation, MonomialPresentation,
                    NcPolynomial, PresentationError, Quiver)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<arrow>->)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<id>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[;,:.@*+\-])
""", re.VERBOSE)

KEYWORDS = ("vertices", "arrows", "relations")


class ParseError(PresentationError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind not in ("ws", "comment"):
                toks.append(_Tok(kind, s, line, col))
            col += len(s)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        t = self.tok
        self.i += 1
        return t

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            raise self.error(f"expected {want!r}, got {got!r}")
        return self.advance()

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def end_statement(self):
        if self.at("punct", ";"):
            self.advance()
        elif not self.at("eof"):
            raise self.error(f"expected ';', got {self.tok.text!r}")

    def parse(self):
        sections: dict[str, object] = {}
        while not self.at("eof"):
            kw = self.expect("id")
            if kw.text not in KEYWORDS:
                raise self.error(f"unknown statement {kw.text!r}", kw)
            if kw.text in sections:
                raise self.error(f"duplicate {kw.text!r} statement", kw)
            if kw.text == "vertices":
                sections["vertices"] = self.id_list()
            elif kw.text == "arrows":
                sections["arrows"] = self.arrow_list()
            else:
                sections["relations"] = self.relation_list()
            self.end_statement()
        if "vertices" not in sections:
            raise ParseError("missing 'vertices' statement", 1, 1)
        return sections

    def id_list(self):
        out = [self.expect("id")]
        while self.at("punct", ","):
            self.advance()
            out.append(self.expect("id"))
        return out

    def arrow_list(self):
        out = []
        if self.at("punct", ";") or self.at("eof"):
            return out
        while True:
            name = self.expect("id")
            self.expect("punct", ":")
            src = self.expect("id")
            self.expect("arrow")
            tgt = self.expect("id")
            deg = 1
            if self.at("punct", "@"):
                self.advance()
                d = self.expect("num")
                if "/" in d.text:
                    raise self.error("arrow degree must be an integer", d)
                deg = int(d.text)
            out.append((name, src, tgt, deg))
            if not self.at("punct", ","):
                return out
            self.advance()

    def relation_list(self):
        out = []
        if self.at("punct", ";") or self.at("eof"):
            return out
        while True:
            out.append(self.polynomial())
            if not self.at("punct", ","):
                return out
            self.advance()

    def polynomial(self):
        start = self.tok
        terms = []
        sign = 1
        if self.at("punct", "+") or self.at("punct", "-"):
            sign = -1 if self.advance().text == "-" else 1
        while True:
            coeff = Fraction(1)
            if self.at("num"):
                coeff = Fraction(self.advance().text)
                self.expect("punct", "*")
            path_tok = self.tok
            names = [self.expect("id").text]
            while self.at("punct", "."):
                self.advance()
                names.append(self.expect("id").text)
            terms.append((sign * coeff, names, path_tok))
            if self.at("punct", "+") or self.at("punct", "-"):
                sign = -1 if self.advance().text == "-" else 1
            else:
                return terms, start


def parse_presentation(text: str) -> MonomialPresentation | GradedPresentation:
    """Parse presentation text.

    Returns a :class:`MonomialPresentation` exactly when every relation is a
    single path with coefficient 1, otherwise a :class:`GradedPresentation`.
    """
    p = _Parser(text)
    sec = p.parse()
    vtoks = sec["vertices"]
    seen = set()
    for t in vtoks:
        if t.text in seen:
            raise ParseError(f"duplicate vertex {t.text!r}", t.line, t.col)
        seen.add(t.text)
    arrows = []
    for name, src, tgt, deg in sec.get("arrows", []):
        if name.text in seen:
            raise ParseError(f"duplicate name {name.text!r}", name.line, name.col)
        seen.add(name.text)
        for t in (src, tgt):
            if t.text not in {v.text for v in vtoks}:
                raise ParseError(f"undeclared vertex {t.text!r}", t.line, t.col)
        arrows.append(Arrow(name.text, src.text, tgt.text, deg))
    try:
        quiver = Quiver(tuple(t.text for t in vtoks), tuple(arrows))
    except PresentationError as e:
        raise ParseError(str(e), vtoks[0].line, vtoks[0].col) from None

    polys = []
    for terms, start in sec.get("relations", []):
        acc = {}
        for coeff, names, tok in terms:
            try:
                path = quiver.path(*names)
            except PresentationError as e:
                raise ParseError(str(e), tok.line, tok.col) from None
            acc[path] = acc.get(path, 0) + coeff
        try:
            poly = NcPolynomial(acc)
        except PresentationError as e:
            raise ParseError(str(e), start.line, start.col) from None
        if poly.is_zero:
            raise ParseError("relation is identically zero", start.line, start.col)
        polys.append((poly, start))

    try:
        if all(poly.is_monomial for poly, _ in polys):
            for poly, start in polys:
                if next(iter(poly.terms)).length < 2:
                    raise ParseError("monomial relations need length >= 2",
                                     start.line, start.col)
            return MonomialPresentation.reduced(
                quiver, [next(iter(poly.terms)) for poly, _ in polys])
        return GradedPresentation(quiver, tuple(poly for poly, _ in polys))
    except ParseError:
        raise
    except PresentationError as e:
        raise ParseError(str(e), 1, 1) from None


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(poly: NcPolynomial) -> str:
    parts = []
    for k, (path, c) in enumerate(poly.terms.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = ".".join(path.arrows)
        if mag != 1:
            body = f"{_format_coeff(mag)}*{body}"
        if k == 0:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def serialize(pres: MonomialPresentation | GradedPresentation) -> str:
    """Write ``pres`` back in the presentation grammar."""
    q = pres.quiver
    lines = [f"vertices {', '.join(q.vertices)};"]
    if q.arrows:
        lines.append("arrows " + ", ".join(
            f"{a.name}:{a.source}->{a.target}@{a.degree}" for a in q.arrows) + ";")
    if isinstance(pres, MonomialPresentation):
        rels = [".".join(r.arrows) for r in pres.relations]
    else:
        rels = [format_polynomial(r) for r in pres.relations]
    if rels:
        lines.append("relations " + ", ".join(rels) + ";")
    return "\n".join(lines) + "\n"


def to_dict(pres: MonomialPresentation | GradedPresentation) -> dict:
    q = pres.quiver
    out = {
        "kind": "monomial" if isinstance(pres, MonomialPresentation) else "graded",
        "vertices": list(q.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target,
                    "degree": a.degree} for a in q.arrows],
    }
    if isinstance(pres, MonomialPresentation):
        out["relations"] = [[{"path": list(r.arrows), "coeff": "1"}]
                            for r in pres.relations]
    else:
        out["relations"] = [[{"path": list(p.arrows), "coeff": str(c)}
                             for p, c in r.terms.items()] for r in pres.relations]
    return out


def to_json(pres, **kw) -> str:
    return json.dumps(to_dict(pres), sort_keys=True, **kw)


def load_presentation(path) -> MonomialPresentation | GradedPresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())
