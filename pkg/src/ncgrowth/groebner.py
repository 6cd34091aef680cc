"""Degree-truncated noncommutative Buchberger procedure for homogeneous
ideals of path algebras.

Polynomials are handled internally as dicts ``{word: Fraction}`` where a
word is a tuple of arrow indices.  Words are compared by weighted degree,
then length, then lexicographically with earlier-declared arrows counting
as larger; with arrows ``x, y`` this makes ``xy > yx``.
"""

from __future__ import annotations

import heapq
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .automaton import GuardError, build_ufnarovski, count_normal_words
from .model import GradedPresentation, MonomialPresentation, NcPolynomial, Quiver


class GroebnerError(ValueError):
    pass


@dataclass(frozen=True)
class TermOrder:
    quiver: Quiver

    def key(self, word):
        return (self.quiver.word_degree(word), len(word), tuple(-i for i in word))

    def leading(self, poly: dict):
        return max(poly, key=self.key)


def _to_dict(q: Quiver, p: NcPolynomial) -> dict:
    return {q.word(path): Fraction(c) for path, c in p.terms.items()}


def _to_poly(q: Quiver, p: dict) -> NcPolynomial:
    return NcPolynomial({q.path_of_word(w): c for w, c in p.items()})


def _monic(order: TermOrder, p: dict) -> dict:
    c = p[order.leading(p)]
    return {w: v / c for w, v in p.items()}


@dataclass(frozen=True)
class TruncatedGB:
    quiver: Quiver
    elements: tuple[tuple[tuple[tuple[int, ...], Fraction], ...], ...]
    degree_bound: int
    complete: bool
    overlaps_processed: int
    pending_above: int

    @property
    def order(self) -> TermOrder:
        return TermOrder(self.quiver)

    def element_dicts(self) -> list[dict]:
        return [dict(e) for e in self.elements]

    @property
    def leading_words(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.order.leading(dict(e)) for e in self.elements)

    @property
    def polynomials(self) -> tuple[NcPolynomial, ...]:
        return tuple(_to_poly(self.quiver, dict(e)) for e in self.elements)

    def certified_degree(self) -> float:
        return float("inf") if self.complete else self.degree_bound

    def certification(self) -> dict:
        return {"degree_bound": self.degree_bound, "complete": self.complete,
                "overlaps_processed": self.overlaps_processed,
                "pending_above_bound": self.pending_above,
                "size": len(self.elements)}

    def to_dict(self) -> dict:
        q = self.quiver
        return {"certification": self.certification(),
                "elements": [[{"path": [q.arrows[i].name for i in w], "coeff": str(c)}
                              for w, c in e] for e in self.elements]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


class _Reducer:
    def __init__(self, order: TermOrder, elements):
        self.order = order
        self.by_lead = {}
        for e in elements:
            self.by_lead[order.leading(e)] = e
        self.lengths = sorted({len(w) for w in self.by_lead})

    def sites(self, word):
        for L in self.lengths:
            for i in range(len(word) - L + 1):
                if word[i:i + L] in self.by_lead:
                    yield i, L

    def first_site(self, word):
        best = None
        for i, L in self.sites(word):
            if best is None or i < best[0]:
                best = (i, L)
        return best

    def rewrite(self, p: dict, word, site) -> None:
        i, L = site
        g = self.by_lead[word[i:i + L]]
        c = p[word]
        left, right = word[:i], word[i + L:]
        linalg.axpy(p, -c, {left + w + right: v for w, v in g.items()})

    def normal_form(self, p: dict, rng: random.Random | None = None) -> dict:
        p = dict(p)
        while True:
            if rng is None:
                todo = None
                for w in sorted(p, key=self.order.key, reverse=True):
                    site = self.first_site(w)
                    if site is not None:
                        todo = (w, site)
                        break
                if todo is None:
                    return p
                self.rewrite(p, *todo)
            else:
                cands = [(w, s) for w in sorted(p, key=self.order.key)
                         for s in self.sites(w)]
                if not cands:
                    return p
                self.rewrite(p, *rng.choice(cands))


def reduce_normal_form(p, basis: TruncatedGB | list, rng: random.Random | None = None):
    """Normal form of ``p`` modulo ``basis``.

    ``p`` may be an :class:`NcPolynomial` or an internal word dict; the
    result has the same type.  With ``rng`` the rewrite site is chosen at
    random each step instead of largest-term-leftmost.
    """
    if isinstance(basis, TruncatedGB):
        q, elems = basis.quiver, basis.element_dicts()
    else:
        q, elems = None, [dict(e) for e in basis]
    if isinstance(p, NcPolynomial):
        if q is None:
            raise TypeError("need a TruncatedGB to reduce an NcPolynomial")
        red = _Reducer(TermOrder(q), elems).normal_form(_to_dict(q, p), rng)
        return _to_poly(q, red) if red else NcPolynomial({})
    if q is None:
        raise TypeError("word-dict reduction needs a TruncatedGB basis")
    return _Reducer(TermOrder(q), elems).normal_form(p, rng)


def _overlaps(order: TermOrder, f: dict, g: dict):
    """S-polynomials from a proper suffix of lead(f) equal to a prefix of lead(g)."""
    u, v = order.leading(f), order.leading(g)
    out = []
    for k in range(1, min(len(u), len(v))):
        if u[len(u) - k:] == v[:k]:
            left, right = u[:len(u) - k], v[k:]
            s = {w + right: c for w, c in f.items()}
            linalg.axpy(s, -1, {left + w: c for w, c in g.items()})
            out.append((u + right, s))
    return out


def buchberger_truncated(gp: GradedPresentation, N: int) -> TruncatedGB:
    """Reduced Gröbner basis of the ideal generated by ``gp.relations``, up
    to weighted degree ``N``.

    Work proceeds in increasing degree; the basis stays interreduced, so
    inclusion overlaps never arise.  ``complete`` is set when no overlap of
    degree above ``N`` remains unprocessed.
    """
    q = gp.quiver
    if not q.degree_zero_acyclic():
        raise GroebnerError("degree-0 cycle: weight-0 rewriting need not terminate")
    if not any(a.degree > 0 for a in q.arrows) and gp.relations:
        raise GroebnerError("all arrows have degree 0")
    order = TermOrder(q)
    rel_degrees = [r.degree for r in gp.relations]
    if rel_degrees and N < max(rel_degrees):
        raise GroebnerError(f"N = {N} below the maximal relation degree {max(rel_degrees)}")

    counter = 0
    queue = []          # (degree, seq, word dict)
    for r in gp.relations:
        heapq.heappush(queue, (r.degree, counter, _to_dict(q, r)))
        counter += 1
    basis: list[dict] = []
    processed = 0
    pending_above = 0

    def push(deg, poly):
        nonlocal counter, pending_above
        if deg > N:
            pending_above += 1
            return
        heapq.heappush(queue, (deg, counter, poly))
        counter += 1

    while queue:
        deg, _, p = heapq.heappop(queue)
        processed += 1
        red = _Reducer(order, basis).normal_form(p)
        if not red:
            continue
        h = _monic(order, red)
        lead_h = order.leading(h)
        # keep the basis reduced: drop elements whose leads contain lead_h,
        # tail-reduce the rest
        keep = []
        for g in basis:
            lg = order.leading(g)
            if any(lg[i:i + len(lead_h)] == lead_h for i in range(len(lg) - len(lead_h) + 1)):
                push(q.word_degree(lg), g)
            else:
                keep.append(g)
        keep.append(h)
        basis = []
        for k, g in enumerate(keep):
            others = _Reducer(order, keep[:k] + keep[k + 1:])
            lg = order.leading(g)
            tail = {w: c for w, c in g.items() if w != lg}
            basis.append({lg: g[lg], **others.normal_form(tail)})
        h = next(g for g in basis if order.leading(g) == lead_h)
        for g in basis:
            pairs = _overlaps(order, h, g)
            if g is not h:
                pairs += _overlaps(order, g, h)
            for word, s in pairs:
                push(q.word_degree(word), s)
    basis.sort(key=lambda g: order.key(order.leading(g)))
    elems = tuple(tuple(sorted(g.items(), key=lambda t: order.key(t[0]), reverse=True))
                  for g in basis)
    return TruncatedGB(q, elems, N, pending_above == 0, processed, pending_above)


def monomial_gb(mp: MonomialPresentation) -> TruncatedGB:
    """A monomial ideal is its own Gröbner basis."""
    q = mp.quiver
    elems = tuple(((w, Fraction(1)),) for w in mp.relation_words)
    return TruncatedGB(q, elems, max((len(w) for w in mp.relation_words), default=0),
                       True, 0, 0)


def leading_word_model(gb: TruncatedGB) -> MonomialPresentation:
    """Monomial algebra on the leading words; same graded dimensions up to
    the certified degree."""
    q = gb.quiver
    return MonomialPresentation.reduced(q, [q.path_of_word(w) for w in gb.leading_words])


def _normal_word_dims(q: Quiver, leads, N: int) -> list[int]:
    """Count words of weighted degree ``<= N`` avoiding every word in ``leads``."""
    leads = set(leads)
    lmax = max((len(w) for w in leads), default=1)
    lengths = sorted({len(w) for w in leads})
    dims = [0] * (N + 1)
    dims[0] = len(q.vertices)
    # frontier: (suffix of length < lmax, weighted degree) -> count
    frontier: dict = {}
    for a in range(len(q.arrows)):
        w = (a,)
        d = q.word_degree(w)
        if d <= N and w not in leads:
            frontier[(w, d)] = frontier.get((w, d), 0) + 1
    steps = 0
    limit = (N + 1) * (len(q.vertices) + 1) + 1
    while frontier:
        steps += 1
        if steps > limit:
            raise GroebnerError("degree-0 words do not terminate")
        nxt: dict = {}
        for (suf, d), c in frontier.items():
            dims[d] += c
            end = q.target_of(suf[-1])
            for a in range(len(q.arrows)):
                if q.source_of(a) != end:
                    continue
                nd = d + q.arrows[a].degree
                if nd > N:
                    continue
                w = suf + (a,)
                if any(len(w) >= L and w[len(w) - L:] in leads for L in lengths):
                    continue
                key = (w[-(lmax - 1):] if lmax > 1 else (), nd)
                if lmax == 1:
                    key = ((a,), nd)
                nxt[key] = nxt.get(key, 0) + c
        frontier = nxt
    return dims


def dims_from_gb(gb: TruncatedGB, N: int) -> list[int]:
    """Graded dimensions ``dim A_0..dim A_N`` from the leading words."""
    if N > gb.certified_degree():
        raise GroebnerError(f"degree {N} beyond the certified degree {gb.degree_bound}")
    q = gb.quiver
    leads = gb.leading_words
    if q.is_standard and all(len(w) >= 2 for w in leads):
        g = build_ufnarovski(leading_word_model(gb))
        return [v.total for v in count_normal_words(g, N)]
    return _normal_word_dims(q, leads, N)


def _paths_of_degree(q: Quiver, n: int) -> list[tuple[int, ...]]:
    out = []

    def extend(word, d):
        if d == n and word:
            out.append(word)
        end = q.target_of(word[-1])
        for a in range(len(q.arrows)):
            if q.source_of(a) == end and d + q.arrows[a].degree <= n:
                extend(word + (a,), d + q.arrows[a].degree)

    for a in range(len(q.arrows)):
        if q.arrows[a].degree <= n:
            extend((a,), q.arrows[a].degree)
    return out


def dims_bruteforce(gp: GradedPresentation, N: int, guard: int = 8,
                    max_paths: int = 20_000) -> list[int]:
    """Graded dimensions by rank of the span of all ``u r v`` in each degree."""
    if N > guard:
        raise GuardError(f"dims_bruteforce limited to N <= {guard}")
    q = gp.quiver
    rels = [_to_dict(q, r) for r in gp.relations]
    words_by_deg = [_paths_of_degree(q, n) for n in range(N + 1)]
    if sum(len(w) for w in words_by_deg) > max_paths:
        raise GuardError("too many paths for brute-force dimensions")
    dims = []
    for n in range(N + 1):
        vecs = []
        for r, rel in zip(gp.relations, rels):
            rest = n - r.degree
            if rest < 0:
                continue
            src = q.vertex_index(r.source)
            tgt = q.vertex_index(r.target)
            for du in range(rest + 1):
                lefts = ([()] if du == 0 else []) + words_by_deg[du]
                rights = ([()] if du == rest else []) + words_by_deg[rest - du]
                for u, v in product(lefts, rights):
                    if u and q.target_of(u[-1]) != src:
                        continue
                    if v and q.source_of(v[0]) != tgt:
                        continue
                    vecs.append({u + w + v: c for w, c in rel.items()})
        base = len(words_by_deg[n]) + (len(q.vertices) if n == 0 else 0)
        dims.append(base - linalg.rank(vecs))
    return dims
