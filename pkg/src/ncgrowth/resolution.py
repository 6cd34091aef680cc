"""Minimal graded free resolutions of right modules over standard-graded
path-algebra quotients, Anick chains of monomial algebras, and the Betti
and Ext-distance bounds built from them.

Basis elements of ``e_v A`` are keys ``(v, word)`` with ``v`` the start
vertex; a free module ``(+)_g e_{v_g} A(-d_g)`` has basis keys
``(g, word)``.  All arithmetic is exact.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .automaton import GuardError, build_ufnarovski, total_dims
from .estimate import SequenceEstimate, entropy_from_sequence  # noqa: F401
from .groebner import TruncatedGB, _Reducer, monomial_gb
from .model import MonomialPresentation

__all__ = [
    "AlgebraTables", "algebra_tables", "GradedModuleData", "trivial_module",
    "truncation_module", "BettiTable", "minimal_resolution", "anick_chains",
    "anick_betti", "euler_identity_defect", "check_betti_inequality",
    "tower_bound", "ext_distance_regular", "ExtDistancePoly",
    "entropy_from_sequence", "SequenceEstimate", "InfiniteGlobalDimension",
]


class ResolutionError(ValueError):
    pass


class InfiniteGlobalDimension(ResolutionError):
    pass


# --- algebra tables ---------------------------------------------------------

class AlgebraTables:
    """Normal-word bases of ``A_0..A_N`` with multiplication by arrows.

    Built from a monomial presentation or from a certified Gröbner basis;
    products are concatenation followed by reduction.
    """

    def __init__(self, gb: TruncatedGB, N: int, monomial: bool):
        q = gb.quiver
        if not q.is_standard:
            raise ResolutionError("resolutions are implemented for standard grading only")
        if N > gb.certified_degree():
            raise ResolutionError(f"degree {N} beyond the certified degree {gb.degree_bound}")
        self.quiver = q
        self.N = N
        self.gb = gb
        self.monomial = monomial
        self._reducer = _Reducer(gb.order, gb.element_dicts())
        self._leads = set(gb.leading_words)
        self._lead_lengths = sorted({len(w) for w in self._leads})
        self.basis = [[(v, ()) for v in range(len(q.vertices))]]
        for n in range(1, N + 1):
            layer = []
            for v, w in self.basis[-1]:
                end = q.target_of(w[-1]) if w else v
                for a in range(len(q.arrows)):
                    if q.source_of(a) == end and self._normal(w + (a,)):
                        layer.append((q.source_of((w + (a,))[0]), w + (a,)))
            self.basis.append(layer)
        self._index = [{k: i for i, k in enumerate(layer)} for layer in self.basis]

    def _normal(self, word) -> bool:
        # words are built by appending, so only suffixes need checking
        return not any(len(word) >= L and word[len(word) - L:] in self._leads
                       for L in self._lead_lengths)

    def dim(self, n: int) -> int:
        return len(self.basis[n])

    def end_vertex(self, key) -> int:
        v, w = key
        return self.quiver.target_of(w[-1]) if w else v

    @lru_cache(maxsize=None)
    def times_arrow(self, key, a: int) -> tuple:
        """Normal form of ``key * a`` as a tuple of ``(key, coeff)``."""
        v, w = key
        q = self.quiver
        if q.source_of(a) != self.end_vertex(key):
            return ()
        word = w + (a,)
        if self._normal(word):
            return (((v, word), Fraction(1)),)
        if self.monomial:
            return ()
        nf = self._reducer.normal_form({word: Fraction(1)})
        return tuple(((v, u), c) for u, c in sorted(nf.items()))

    def multiply(self, x, y) -> dict:
        """Product of two basis keys."""
        xv, _ = x
        yv, yw = y
        if self.end_vertex(x) != yv:
            return {}
        acc = {x: Fraction(1)}
        for a in yw:
            nxt: dict = {}
            for k, c in acc.items():
                for k2, c2 in self.times_arrow(k, a):
                    linalg.axpy(nxt, c, {k2: c2})
            acc = nxt
        return acc

    def associativity_defects(self, max_deg: int) -> int:
        """Count failures of (xy)z = x(yz) over basis triples of total degree <= max_deg."""
        bad = 0
        keys = [k for n in range(max_deg + 1) for k in self.basis[n]]
        deg = {k: len(k[1]) for k in keys}
        for x in keys:
            for y in keys:
                if deg[x] + deg[y] > max_deg:
                    continue
                xy = self.multiply(x, y)
                for z in keys:
                    if deg[x] + deg[y] + deg[z] > max_deg:
                        continue
                    left: dict = {}
                    for k, c in xy.items():
                        linalg.axpy(left, c, self.multiply(k, z))
                    right: dict = {}
                    for k, c in self.multiply(y, z).items():
                        linalg.axpy(right, c, self.multiply(x, k))
                    bad += left != right
        return bad


def algebra_tables(src, N: int) -> AlgebraTables:
    if isinstance(src, MonomialPresentation):
        return AlgebraTables(monomial_gb(src), N, monomial=True)
    if isinstance(src, TruncatedGB):
        return AlgebraTables(src, N, monomial=False)
    raise TypeError("algebra_tables takes a MonomialPresentation or TruncatedGB")


# --- modules ----------------------------------------------------------------

@dataclass(frozen=True)
class GradedModuleData:
    """A submodule ``N`` of ``F = (+)_g e_{v_g} A(-d_g)`` given by generators,
    standing for ``N`` itself (``kind='sub'``) or for ``F / N``
    (``kind='quotient'``).  ``shift`` relabels internal degrees by ``-shift``."""
    free: tuple[tuple[int, int], ...]                 # (vertex, degree) per generator
    generators: tuple[tuple[dict, int, int], ...]     # (vector, degree, end vertex)
    kind: str
    shift: int = 0
    tag: str = ""


def trivial_module(tables: AlgebraTables) -> GradedModuleData:
    q = tables.quiver
    free = tuple((v, 0) for v in range(len(q.vertices)))
    gens = tuple(({(q.source_of(a), (a,)): Fraction(1)}, 1, q.target_of(a))
                 for a in range(len(q.arrows)))
    return GradedModuleData(free, gens, "quotient", 0, "k")


def truncation_module(tables: AlgebraTables, n: int) -> GradedModuleData:
    """``A_{>=n}[n]`` as the submodule of ``(+)_v e_v A`` spanned by degree-n words."""
    q = tables.quiver
    free = tuple((v, 0) for v in range(len(q.vertices)))
    gens = tuple(({(v, w): Fraction(1)}, n, tables.end_vertex((v, w)))
                 for v, w in tables.basis[n])
    return GradedModuleData(free, gens, "sub", n, f"A_>={n}[{n}]")


def _minimal_generators(tables, free, gens, j_max):
    """Pick a minimal generating set of the submodule spanned by ``gens``
    (degrees <= j_max), degree by degree per end vertex."""
    q = tables.quiver
    by_deg = defaultdict(list)
    for vec, d, e in gens:
        if d <= j_max:
            by_deg[(d, e)].append(vec)
    chosen = []
    spans: dict = {}        # (degree, end vertex) -> list of basis vectors
    if not by_deg:
        return chosen
    lo = min(d for d, _ in by_deg)
    nv = len(q.vertices)
    for j in range(lo, j_max + 1):
        for e in range(nv):
            ech = linalg.Echelon()
            for a in range(len(q.arrows)):
                if q.target_of(a) != e:
                    continue
                for x in spans.get((j - 1, q.source_of(a)), ()):
                    ech.add(_times_arrow_vec(tables, x, a))
            for vec in by_deg.get((j, e), ()):
                if ech.add(vec) is None:
                    chosen.append((vec, j, e))
            if ech.rows:
                spans[(j, e)] = list(ech.rows.values())
    return chosen


def _times_arrow_vec(tables, vec: dict, a: int) -> dict:
    """Right multiplication by an arrow; generator ids carry their vertex
    in position 1."""
    out: dict = {}
    for (g, w), c in vec.items():
        for (_, w2), c2 in tables.times_arrow((g[1], w), a):
            linalg.axpy(out, c * c2, {(g, w2): 1})
    return out


@dataclass(frozen=True)
class BettiTable:
    entries: dict                 # (i, j) -> b_ij, only nonzero entries
    i_max: int
    j_max: int
    minimal_certified: bool = True
    tag: str = ""

    def b(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(c for (k, _), c in self.entries.items() if k == i)

    @property
    def totals(self) -> tuple[int, ...]:
        return tuple(self.total(i) for i in range(self.i_max + 1))

    def D(self, i: int) -> int:
        """max{j : b_tj != 0 for some t <= i}; -1 when empty."""
        return max((j for (t, j) in self.entries if t <= i), default=-1)

    def band_ok(self) -> bool:
        return all(j >= i for (i, j) in self.entries)

    def row_series(self, i: int) -> dict:
        return {j: c for (k, j), c in self.entries.items() if k == i}

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "b_ij"])
        for (i, j), c in sorted(self.entries.items()):
            w.writerow([i, j, c])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"tag": self.tag, "i_max": self.i_max, "j_max": self.j_max,
                "minimal_certified": self.minimal_certified,
                "entries": [[i, j, c] for (i, j), c in sorted(self.entries.items())],
                "totals": list(self.totals)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _resolve_submodule(tables, free, gens, steps, j_max):
    """Betti numbers of the submodule spanned by ``gens``: a list over
    homological steps of ``{degree: count}``, and the minimality flag.

    ``gens`` are keyed by ``(generator index into free, word)``.
    """
    q = tables.quiver
    out = []
    minimal = True
    F = [(0, v, d, g) for g, (v, d) in enumerate(free)]
    S = [({(F[g], w): c for (g, w), c in vec.items()}, d, e) for vec, d, e in gens]
    for level in range(1, steps + 1):
        chosen = _minimal_generators(tables, F, S, j_max)
        row = defaultdict(int)
        for _, d, _ in chosen:
            row[d] += 1
        out.append(dict(row))
        if level == steps:
            break
        if not chosen:
            out.extend({} for _ in range(steps - level))
            break
        Fn = [(level, e, d, k) for k, (_, d, e) in enumerate(chosen)]
        images: dict = {}
        kernels = []
        for j in range(min(d for _, d, _ in chosen), j_max + 1):
            for e in range(len(q.vertices)):
                block = []
                for k, (vec, d, v) in enumerate(chosen):
                    if d > j:
                        continue
                    for key in tables.basis[j - d]:
                        if key[0] != v or tables.end_vertex(key) != e:
                            continue
                        w = key[1]
                        if w:
                            img = _times_arrow_vec(tables, images[(k, w[:-1])], w[-1])
                        else:
                            img = vec
                        images[(k, w)] = img
                        block.append(((Fn[k], w), img))
                if not block:
                    continue
                for rel in linalg.kernel([img for _, img in block]):
                    kv = {block[i][0]: c for i, c in rel.items()}
                    # a kernel element touching a generator breaks minimality
                    if any(not w for (_, w) in kv):
                        minimal = False
                    kernels.append((kv, j, e))
        F, S = Fn, kernels
    return out, minimal


def minimal_resolution(mod: GradedModuleData, tables: AlgebraTables,
                       i_max: int, j_max: int) -> BettiTable:
    """Graded Betti numbers ``b_ij`` for ``i <= i_max``, internal degree
    ``j <= j_max`` (before the module's shift is applied).

    Each step takes a minimal generating set of the current kernel, chosen
    modulo (previous degrees) * (arrows), and computes the kernel of the
    induced free map by exact elimination.
    """
    if j_max > tables.N:
        raise ResolutionError(f"j_max = {j_max} exceeds table degree {tables.N}")
    entries = {}
    if mod.kind == "quotient":
        for v, d in mod.free:
            if d <= j_max:
                entries[(0, d)] = entries.get((0, d), 0) + 1
        steps, offset = i_max, 1
    else:
        steps, offset = i_max + 1, 0
    rows, minimal = _resolve_submodule(tables, mod.free, mod.generators, steps, j_max)
    for s, row in enumerate(rows):
        for j, c in row.items():
            if c:
                entries[(s + offset, j - mod.shift)] = c
    return BettiTable(entries, i_max, j_max - mod.shift, minimal, mod.tag)


# --- Anick chains -----------------------------------------------------------

@dataclass(frozen=True)
class Chain:
    level: int
    word: tuple[int, ...]
    source: int
    target: int
    tail: int              # length of the last tail


def anick_chains(mp: MonomialPresentation, i_max: int, max_len: int | None = None,
                 guard: int = 200_000) -> list[list[Chain]]:
    """Chains level by level: vertices, arrows, obstructions, then each
    chain extended by a tail ``t`` such that an obstruction starts inside the
    previous tail and ends at the new last letter, and the word (previous
    tail) + ``t`` contains no other obstruction."""
    q = mp.quiver
    obs = set(mp.relation_words)
    lengths = sorted({len(w) for w in obs})
    levels = [[Chain(0, (), v, v, 0) for v in range(len(q.vertices))]]
    if i_max >= 1:
        levels.append([Chain(1, (a,), q.source_of(a), q.target_of(a), 1)
                       for a in range(len(q.arrows))])
    total = 0
    for i in range(2, i_max + 1):
        nxt = []
        for ch in levels[-1]:
            s = ch.word
            start_tail = len(s) - ch.tail
            for f in mp.relation_words:
                for p in range(start_tail, len(s)):
                    k = len(s) - p          # overlap length
                    if k >= len(f) or s[p:] != f[:k]:
                        continue
                    if i == 2 and p != 0:
                        continue
                    t = f[k:]
                    c = s + t
                    if max_len is not None and len(c) > max_len:
                        continue
                    # old tail + new tail holds no obstruction but the suffix f
                    bad = any(c[e - L:e] in obs for e in range(len(s) + 1, len(c))
                              for L in lengths if e - L >= start_tail)
                    if bad:
                        continue
                    nxt.append(Chain(i, c, ch.source, q.target_of(c[-1]), len(t)))
        total += len(nxt)
        if total > guard:
            raise GuardError("Anick chain explosion")
        nxt = sorted(set(nxt), key=lambda ch: (len(ch.word), ch.word))
        levels.append(nxt)
        if not nxt:
            break
    while len(levels) < i_max + 1:
        levels.append([])
    return levels


def anick_betti(mp: MonomialPresentation, i_max: int, max_len: int | None = None) -> BettiTable:
    entries: dict = {}
    for level in anick_chains(mp, i_max, max_len):
        for ch in level:
            key = (ch.level, len(ch.word))
            entries[key] = entries.get(key, 0) + 1
    j_max = max_len if max_len is not None else max((j for _, j in entries), default=0)
    return BettiTable(entries, i_max, j_max, True, "k (Anick)")


def path_count_matrix(mp: MonomialPresentation, n_max: int):
    """``H[v][w][n]``: normal words of length n from v to w."""
    q = mp.quiver
    nv = len(q.vertices)
    obs = set(mp.relation_words)
    lengths = sorted({len(w) for w in obs})
    keep = max(lengths, default=1) - 1
    H = [[[0] * (n_max + 1) for _ in range(nv)] for _ in range(nv)]
    for v in range(nv):
        H[v][v][0] = 1
    dp = defaultdict(int)
    for a in range(len(q.arrows)):
        if (a,) not in obs:
            dp[(q.source_of(a), (a,))] += 1
    for n in range(1, n_max + 1):
        nxt = defaultdict(int)
        for (v, suf), c in dp.items():
            H[v][q.target_of(suf[-1])][n] += c
            if n == n_max:
                continue
            for a in range(len(q.arrows)):
                if q.source_of(a) != q.target_of(suf[-1]):
                    continue
                w = suf + (a,)
                if any(len(w) >= L and w[len(w) - L:] in obs for L in lengths):
                    continue
                nxt[(v, w[-keep:] if keep else (a,))] += c
        dp = nxt
    return H


def euler_identity_defect(mp: MonomialPresentation, n_max: int = 12):
    """Coefficients of ``C(z) H(z) - I`` up to ``z^n_max`` where ``C`` is the
    alternating chain matrix; all zero when the identity holds."""
    q = mp.quiver
    nv = len(q.vertices)
    C = [[[0] * (n_max + 1) for _ in range(nv)] for _ in range(nv)]
    for level in anick_chains(mp, n_max + 1, max_len=n_max):
        for ch in level:
            C[ch.source][ch.target][len(ch.word)] += (-1) ** ch.level
    H = path_count_matrix(mp, n_max)
    defects = []
    for v in range(nv):
        for u in range(nv):
            for n in range(n_max + 1):
                s = sum(C[v][w][k] * H[w][u][n - k] for w in range(nv) for k in range(n + 1))
                s -= 1 if (v == u and n == 0) else 0
                if s:
                    defects.append((v, u, n, s))
    return defects


# --- Betti inequality and tower bounds --------------------------------------

@dataclass(frozen=True)
class BettiInequalityRow:
    i: int
    b_M: int
    b_k: int
    D_i: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.b_M <= self.rhs


def _class_key(mp: MonomialPresentation, tables, key):
    keep = mp.max_relation_length - 1
    v, w = key
    return (tables.end_vertex(key), w[len(w) - keep:] if keep else ())


def _annihilator_generators(mp: MonomialPresentation, tables, key, max_len):
    """Minimal words u with key * u = 0 (monomial algebras only)."""
    q = mp.quiver
    obs = set(mp.relation_words)
    lengths = sorted({len(x) for x in obs})
    _, w = key
    e = tables.end_vertex(key)
    out = []

    def walk(u, end):
        for a in range(len(q.arrows)):
            if q.source_of(a) != end:
                continue
            u2 = u + (a,)
            if not tables._normal(u2):
                continue
            full = w + u2
            if any(len(full) >= L and full[len(full) - L:] in obs for L in lengths):
                out.append(u2)
            elif len(u2) < max_len:
                walk(u2, q.target_of(a))

    walk((), e)
    return e, out


def truncation_betti(mp: MonomialPresentation, n: int, i_max: int, j_rel_max: int,
                     direct: bool = False) -> BettiTable:
    """Betti table of ``A_{>=n}[n]`` (degrees relative to ``n``).

    By default ``A_{>=n}`` is split as a sum of cyclic modules ``wA`` over
    normal words ``w`` of length ``n``; ``wA`` depends only on the last
    ``L - 1`` letters of ``w`` and is resolved through its annihilator.
    ``direct=True`` resolves the whole submodule at once instead.
    """
    if direct:
        tables = algebra_tables(mp, n + j_rel_max)
        return minimal_resolution(truncation_module(tables, n), tables, i_max, n + j_rel_max)
    tables = algebra_tables(mp, max(n, j_rel_max))
    words = algebra_tables(mp, n).basis[n] if n > tables.N else tables.basis[n]
    classes: dict = {}
    for key in words:
        ck = _class_key(mp, tables, key)
        if ck not in classes:
            classes[ck] = [key, 0]
        classes[ck][1] += 1
    entries: dict = {}
    minimal = True
    if words:
        entries[(0, 0)] = len(words)
    for rep, mult in classes.values():
        e, ann = _annihilator_generators(mp, tables, rep, j_rel_max)
        if not ann or i_max == 0:
            continue
        free = ((e, 0),)
        gens = tuple(({(0, u): Fraction(1)}, len(u), tables.end_vertex((e, u)))
                     for u in ann)
        rows, ok = _resolve_submodule(tables, free, gens, i_max, j_rel_max)
        minimal &= ok
        for s, row in enumerate(rows):
            for j, c in row.items():
                entries[(s + 1, j)] = entries.get((s + 1, j), 0) + mult * c
    return BettiTable(entries, i_max, j_rel_max, minimal, f"A_>={n}[{n}]")


def check_betti_inequality(mp: MonomialPresentation, n: int, i_max: int,
                           slack: int = 2, direct: bool = False):
    """Compare ``b_i(M)`` with ``b_i(k) * (dim A_n + ... + dim A_{n+D_i})`` for
    ``M = A_{>=n}[n]``, each ``i <= i_max``."""
    kb = anick_betti(mp, i_max)
    k_lin = trivial_betti(mp, i_max, kb.D(i_max) + slack)
    if k_lin.entries != {key: c for key, c in kb.entries.items() if key[1] <= k_lin.j_max}:
        raise ResolutionError("trivial-module Betti numbers disagree with Anick chains")
    j_rel = kb.D(i_max) + slack
    mb = truncation_betti(mp, n, i_max, j_rel, direct=direct)
    dims = total_dims(build_ufnarovski(mp), n + kb.D(i_max))
    rows = []
    for i in range(i_max + 1):
        Di = kb.D(i)
        rhs = kb.total(i) * sum(dims[n:n + Di + 1])
        rows.append(BettiInequalityRow(i, mb.total(i), kb.total(i), Di, rhs))
    return rows


def trivial_betti(mp_or_gb, i_max: int, j_max: int) -> BettiTable:
    tables = algebra_tables(mp_or_gb, j_max)
    return minimal_resolution(trivial_module(tables), tables, i_max, j_max)


@dataclass(frozen=True)
class TowerBound:
    gl_dim: int
    betti: tuple[int, ...]              # b_0^k .. b_{d-1}^k
    D: int
    n: int
    values: dict                        # t -> B(n, t)
    window: int                         # dim A_{n-D} + ... + dim A_{n+D}
    complexity: int | None = None       # sum of ranks r(n-D..n)

    def C(self, t: float) -> float:
        return sum(b * math.exp((i + 1) * t) for i, b in enumerate(self.betti))

    @property
    def holds(self) -> bool | None:
        """Rank complexity against the bound at t = 0."""
        if self.complexity is None:
            return None
        return self.complexity <= sum(self.betti) * self.window

    def to_dict(self) -> dict:
        return {"gl_dim": self.gl_dim, "betti": list(self.betti), "D": self.D,
                "n": self.n, "window": self.window, "values": {str(t): v for t, v in self.values.items()},
                "complexity": self.complexity}


def global_dimension(mp: MonomialPresentation, guard: int = 12) -> int:
    levels = anick_chains(mp, guard + 1)
    for i, lev in enumerate(levels):
        if not lev:
            return i - 1
    raise InfiniteGlobalDimension(f"global dimension >= {guard}")


def tower_bound(mp: MonomialPresentation, n: int, D: int | None = None,
                t_grid=(0.0,), guard: int = 12, ranks=None) -> TowerBound:
    """``B(n, t) = C(t) (dim A_{n-D} + ... + dim A_{n+D})`` with
    ``C(t) = sum_{i=1}^d b_{i-1} e^{it}``.

    ``ranks``, if given, maps m to the rank r(m) of the m-th twist and is
    used to report the rank-based complexity ``r(n-D) + ... + r(n)``.
    """
    d = global_dimension(mp, guard)
    kb = anick_betti(mp, max(d, 0))
    D_min = max((kb.D(i) for i in range(d)), default=0)
    if D is None:
        D = D_min
    elif D < D_min:
        raise ResolutionError(f"D = {D} below the required {D_min}")
    betti = tuple(kb.total(i) for i in range(d))
    dims = total_dims(build_ufnarovski(mp), n + D)
    window = sum(dims[k] for k in range(max(n - D, 0), n + D + 1))
    values = {}
    for t in t_grid:
        C = sum(b * math.exp((i + 1) * t) for i, b in enumerate(betti))
        values[float(t)] = C * window
    complexity = None
    if ranks is not None:
        complexity = sum(ranks(m) for m in range(max(n - D, 0), n + 1))
    return TowerBound(d, betti, D, n, values, window, complexity)


# --- Ext-distance -----------------------------------------------------------

@dataclass(frozen=True)
class ExtDistancePoly:
    """Laurent polynomial in ``u = e^{-t}``: ``{m: dim Hom(M, N[m])}``."""
    coeffs: dict

    def __call__(self, t: float) -> float:
        return sum(c * math.exp(-m * t) for m, c in self.coeffs.items())

    @property
    def total(self) -> int:
        return sum(self.coeffs.values())

    def to_dict(self) -> dict:
        return {str(m): c for m, c in sorted(self.coeffs.items())}


def ext_distance_regular(dims, l: int, n: int):
    """``(eps(O, S^n O), eps(G, S^n G))`` for ``G = O (+) ... (+) O(l-1)``.

    Only degree-0 Ext contributes, so both are constant in ``t``:
    ``a_n`` and ``sum_{|k| < l} (l - |k|) a_{n+k}``.
    """
    if l < 1:
        raise ResolutionError("l must be >= 1")
    lo, hi = n - (l - 1), n + (l - 1)
    if lo < 0 or hi >= len(dims):
        raise ResolutionError(f"dims needed for indices {lo}..{hi}, have 0..{len(dims) - 1}")
    eo = ExtDistancePoly({0: dims[n]})
    eg = ExtDistancePoly({0: sum((l - abs(k)) * dims[n + k] for k in range(-(l - 1), l))})
    return eo, eg
