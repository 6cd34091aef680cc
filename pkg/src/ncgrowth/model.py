"""Quivers, paths and presentations of graded quiver algebras.

Paths compose left to right: ``p.q`` is ``p`` followed by ``q``, so the
target of each arrow is the source of the next one.  Internally the
algorithms work with *words*, tuples of arrow indices; the :class:`Path`
objects here are the public, validated form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class PresentationError(ValueError):
    """Raised for structurally invalid quivers, paths or relations."""


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 1


@dataclass(frozen=True)
class Path:
    """A composable sequence of arrows.

    The empty path at vertex ``v`` has ``arrows == ()`` and
    ``source == target == v``.
    """

    arrows: tuple[str, ...]
    source: str
    target: str
    degree: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def endpoint(self) -> str:
        return self.target

    def __str__(self) -> str:
        return ".".join(self.arrows) if self.arrows else f"e_{self.source}"


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _arrow_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _vertex_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise PresentationError("duplicate vertex identifier")
        vidx = {v: i for i, v in enumerate(self.vertices)}
        aidx = {}
        for i, a in enumerate(self.arrows):
            if a.name in aidx or a.name in vidx:
                raise PresentationError(f"duplicate name {a.name!r}")
            if a.source not in vidx or a.target not in vidx:
                raise PresentationError(
                    f"arrow {a.name!r} uses an undeclared vertex")
            if a.degree < 0:
                raise PresentationError(f"arrow {a.name!r} has negative degree")
            aidx[a.name] = i
        if self.arrows and all(a.degree == 0 for a in self.arrows):
            raise PresentationError("at least one arrow must have positive degree")
        object.__setattr__(self, "_arrow_index", aidx)
        object.__setattr__(self, "_vertex_index", vidx)

    @classmethod
    def build(cls, vertices: Iterable[str],
              arrows: Iterable[tuple]) -> "Quiver":
        """``arrows`` holds ``(name, source, target)`` or
        ``(name, source, target, degree)`` tuples."""
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows))

    # --- index helpers used by the algorithms -------------------------
    def arrow_index(self, name: str) -> int:
        try:
            return self._arrow_index[name]
        except KeyError:
            raise PresentationError(f"unknown arrow {name!r}") from None

    def vertex_index(self, name: str) -> int:
        try:
            return self._vertex_index[name]
        except KeyError:
            raise PresentationError(f"unknown vertex {name!r}") from None

    @property
    def is_standard(self) -> bool:
        """All arrows have degree one."""
        return all(a.degree == 1 for a in self.arrows)

    def source_of(self, i: int) -> int:
        return self._vertex_index[self.arrows[i].source]

    def target_of(self, i: int) -> int:
        return self._vertex_index[self.arrows[i].target]

    def word_degree(self, word: Sequence[int]) -> int:
        return sum(self.arrows[i].degree for i in word)

    def is_composable(self, word: Sequence[int]) -> bool:
        return all(self.target_of(a) == self.source_of(b)
                   for a, b in zip(word, word[1:]))

    # --- public path construction ---------------------------------------
    def path(self, *names: str) -> Path:
        if not names:
            raise PresentationError("use empty_path() for paths of length 0")
        word = tuple(self.arrow_index(n) for n in names)
        for a, b in zip(word, word[1:]):
            if self.target_of(a) != self.source_of(b):
                raise PresentationError(
                    f"path {'.'.join(names)} not composable: "
                    f"{self.arrows[a].name} ends at {self.arrows[a].target}, "
                    f"{self.arrows[b].name} starts at {self.arrows[b].source}")
        return Path(tuple(names), self.arrows[word[0]].source,
                    self.arrows[word[-1]].target, self.word_degree(word))

    def empty_path(self, vertex: str) -> Path:
        self.vertex_index(vertex)
        return Path((), vertex, vertex, 0)

    def word(self, p: Path) -> tuple[int, ...]:
        return tuple(self.arrow_index(n) for n in p.arrows)

    def path_of_word(self, word: Sequence[int], vertex: str | None = None) -> Path:
        if not word:
            if vertex is None:
                raise PresentationError("empty word needs a vertex")
            return self.empty_path(vertex)
        return self.path(*(self.arrows[i].name for i in word))

    def degree_zero_acyclic(self) -> bool:
        """True iff the subquiver of degree-0 arrows has no oriented cycle."""
        return self._acyclic(lambda a: a.degree == 0)

    def is_acyclic(self) -> bool:
        return self._acyclic(lambda a: True)

    def _acyclic(self, keep) -> bool:
        succ = [[] for _ in self.vertices]
        for i, a in enumerate(self.arrows):
            if keep(a):
                succ[self.source_of(i)].append(self.target_of(i))
        state = [0] * len(self.vertices)  # 0 new, 1 on stack, 2 done

        def visit(v):
            state[v] = 1
            for w in succ[v]:
                if state[w] == 1 or (state[w] == 0 and not visit(w)):
                    return False
            state[v] = 2
            return True

        return all(state[v] or visit(v) for v in range(len(self.vertices)))


class NcPolynomial:
    """Homogeneous linear combination of parallel paths with rational
    coefficients.  Immutable; zero coefficients are dropped."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Mapping[Path, Fraction | int]):
        clean = {}
        for p, c in terms.items():
            c = Fraction(c)
            if c:
                clean[p] = clean.get(p, 0) + c
        clean = {p: c for p, c in clean.items() if c}
        ends = {(p.source, p.target) for p in clean}
        degs = {p.degree for p in clean}
        if len(ends) > 1:
            raise PresentationError("relation is not parallel: "
                                    + self._fmt(clean))
        if len(degs) > 1:
            raise PresentationError("relation is not homogeneous: "
                                    + self._fmt(clean))
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].arrows))
        self._key = frozenset(self.terms.items())

    @staticmethod
    def _fmt(terms) -> str:
        return " + ".join(f"{c}*{p}" for p, c in terms.items()) or "0"

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return next(iter(self.terms)).degree

    @property
    def source(self) -> str:
        return next(iter(self.terms)).source

    @property
    def target(self) -> str:
        return next(iter(self.terms)).target

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) == 1

    def __eq__(self, other):
        return isinstance(other, NcPolynomial) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"NcPolynomial({self._fmt(self.terms)})"


def _contains(big: Sequence, small: Sequence) -> bool:
    n, k = len(big), len(small)
    return any(tuple(big[i:i + k]) == tuple(small) for i in range(n - k + 1))


@dataclass(frozen=True)
class MonomialPresentation:
    """Path algebra of ``quiver`` modulo finitely many paths of length >= 2."""

    quiver: Quiver
    relations: tuple[Path, ...] = ()

    def __post_init__(self):
        rels = tuple(self.relations)
        object.__setattr__(self, "relations", rels)
        words = []
        for r in rels:
            if r.length < 2:
                raise PresentationError(
                    f"monomial relation {r} must have length >= 2")
            # re-validate composability against this quiver
            self.quiver.path(*r.arrows)
            words.append(r.arrows)
        if len(set(words)) != len(words):
            raise PresentationError("duplicate relation")
        for i, u in enumerate(words):
            for j, v in enumerate(words):
                if i != j and _contains(v, u):
                    raise PresentationError(
                        f"relation {'.'.join(v)} contains relation {'.'.join(u)}")

    @classmethod
    def reduced(cls, quiver: Quiver, paths: Iterable[Path]) -> "MonomialPresentation":
        """Drop duplicates and relations containing a shorter relation."""
        uniq = sorted({p.arrows: p for p in paths}.values(),
                      key=lambda p: (p.length, p.arrows))
        keep: list[Path] = []
        for p in uniq:
            if not any(_contains(p.arrows, q.arrows) for q in keep):
                keep.append(p)
        return cls(quiver, tuple(keep))

    @property
    def relation_words(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.quiver.word(r) for r in self.relations)

    @property
    def max_relation_length(self) -> int:
        return max((r.length for r in self.relations), default=1)

    def as_graded(self) -> "GradedPresentation":
        return GradedPresentation(self.quiver, tuple(
            NcPolynomial({r: 1}) for r in self.relations))


@dataclass(frozen=True)
class GradedPresentation:
    """Path algebra of ``quiver`` modulo homogeneous parallel relations."""

    quiver: Quiver
    relations: tuple[NcPolynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.is_zero:
                raise PresentationError("zero relation")
            for p in r.terms:
                if p.length == 0:
                    raise PresentationError("relations may not contain empty paths")
                self.quiver.path(*p.arrows)
        if not self.quiver.degree_zero_acyclic():
            raise PresentationError("degree-0 subquiver has an oriented cycle")

    @property
    def is_monomial(self) -> bool:
        return all(r.is_monomial for r in self.relations)

    def as_monomial(self) -> MonomialPresentation:
        if not self.is_monomial:
            raise PresentationError("presentation has non-monomial relations")
        return MonomialPresentation.reduced(
            self.quiver, (next(iter(r.terms)) for r in self.relations))
