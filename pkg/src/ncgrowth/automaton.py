"""Normal-word automaton of a monomial algebra and exact word counting.

For relations of maximal length ``L`` the states are the normal words of
length ``L - 1`` and ``u -> v`` is a transition labelled by the last arrow
of ``v`` whenever ``u`` and ``v`` overlap in ``L - 2`` letters and the
length-``L`` word they span is normal.  Paths of length ``n - (L - 1)`` in
this graph are in bijection with normal words of length ``n``.  Without
relations the graph is the quiver itself.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field

from . import _kernels
from .model import MonomialPresentation

EXPONENTIAL = math.inf


class GuardError(RuntimeError):
    """A configurable resource limit was exceeded."""


@dataclass(frozen=True)
class UfnarovskiGraph:
    presentation: MonomialPresentation
    state_len: int
    states: tuple[tuple[int, ...], ...]
    endpoints: tuple[int, ...]
    transitions: tuple[tuple[int, int, int], ...]   # (source, target, arrow)
    short_counts: tuple[tuple[int, ...], ...]        # per vertex, lengths < state_len
    indptr: tuple[int, ...] = field(repr=False)
    indices: tuple[int, ...] = field(repr=False)

    @property
    def quiver(self):
        return self.presentation.quiver

    @property
    def n_states(self) -> int:
        return len(self.states)

    def state_label(self, s: int) -> str:
        w = self.states[s]
        if not w:
            return self.quiver.vertices[self.endpoints[s]]
        return ".".join(self.quiver.arrows[i].name for i in w)

    def successors(self, s: int):
        return self.indices[self.indptr[s]:self.indptr[s + 1]]


def _relation_table(mp: MonomialPresentation):
    by_len: dict[int, set] = {}
    for w in mp.relation_words:
        by_len.setdefault(len(w), set()).add(w)
    return by_len


def _ends_with_relation(word, by_len) -> bool:
    n = len(word)
    return any(k <= n and word[n - k:] in rels for k, rels in by_len.items())


def _normal_words_by_length(mp, max_len, by_len):
    """Normal words of lengths 0..max_len grouped by length (length 0 omitted)."""
    q = mp.quiver
    out_arrows = [[] for _ in q.vertices]
    for i in range(len(q.arrows)):
        out_arrows[q.source_of(i)].append(i)
    layers = [[]]
    cur = [(i,) for i in range(len(q.arrows)) if not _ends_with_relation((i,), by_len)]
    for length in range(1, max_len + 1):
        layers.append(cur)
        if length == max_len:
            break
        nxt = []
        for w in cur:
            for a in out_arrows[q.target_of(w[-1])]:
                w2 = w + (a,)
                if not _ends_with_relation(w2, by_len):
                    nxt.append(w2)
        cur = nxt
    return layers


def build_ufnarovski(mp: MonomialPresentation) -> UfnarovskiGraph:
    q = mp.quiver
    by_len = _relation_table(mp)
    state_len = mp.max_relation_length - 1
    nv = len(q.vertices)
    if state_len == 0:
        states = tuple(() for _ in q.vertices)
        endpoints = tuple(range(nv))
        trans = tuple((q.source_of(i), q.target_of(i), i) for i in range(len(q.arrows)))
        short = ()
    else:
        layers = _normal_words_by_length(mp, state_len, by_len)
        short = [tuple([1] * nv)]
        for length in range(1, state_len):
            row = [0] * nv
            for w in layers[length]:
                row[q.target_of(w[-1])] += 1
            short.append(tuple(row))
        short = tuple(short)
        states = tuple(sorted(layers[state_len]))
        index = {w: k for k, w in enumerate(states)}
        endpoints = tuple(q.target_of(w[-1]) for w in states)
        rel_full = by_len.get(state_len + 1, set())
        trans = []
        for k, u in enumerate(states):
            for a in range(len(q.arrows)):
                if q.source_of(a) != endpoints[k]:
                    continue
                w = u + (a,)
                v = w[1:]
                if v in index and w not in rel_full:
                    trans.append((k, index[v], a))
        trans = tuple(trans)
    indptr = [0]
    indices = []
    for s in range(len(states)):
        indices.extend(t for (u, t, _) in trans if u == s)
        indptr.append(len(indices))
    return UfnarovskiGraph(mp, state_len, states, endpoints, trans, short,
                           tuple(indptr), tuple(indices))


@dataclass(frozen=True)
class PathCountVector:
    m: int
    counts: dict            # vertex name -> count
    total: int


def state_walk_table(g: UfnarovskiGraph, m_max: int) -> list[list[int]]:
    """``table[m][s]``: paths of length ``m`` in ``g`` ending at state ``s``."""
    return _kernels.walk_table(g.indptr, g.indices, [1] * g.n_states, m_max)


def count_normal_words(g: UfnarovskiGraph, n_max: int) -> list[PathCountVector]:
    """Normal words of each length ``0..n_max`` counted by end vertex."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    names = g.quiver.vertices
    out = []
    for m in range(min(n_max + 1, g.state_len)):
        row = g.short_counts[m]
        out.append(PathCountVector(m, dict(zip(names, row)), sum(row)))
    if n_max >= g.state_len:
        table = state_walk_table(g, n_max - g.state_len)
        for k, row in enumerate(table):
            per = [0] * len(names)
            for s, c in enumerate(row):
                per[g.endpoints[s]] += c
            out.append(PathCountVector(g.state_len + k, dict(zip(names, per)), sum(per)))
    return out


def total_dims(g: UfnarovskiGraph, n_max: int) -> list[int]:
    return [v.total for v in count_normal_words(g, n_max)]


def enumerate_words_bruteforce(mp: MonomialPresentation, n: int,
                               guard: int = 14) -> PathCountVector:
    """Count normal words of length ``n`` by listing every composable arrow
    sequence and discarding those that contain a relation."""
    if n > guard:
        raise GuardError(f"brute-force enumeration limited to n <= {guard}")
    q = mp.quiver
    names = q.vertices
    per = dict.fromkeys(names, 0)
    if n == 0:
        per = dict.fromkeys(names, 1)
        return PathCountVector(0, per, len(names))
    rels = [tuple(r.arrows) for r in mp.relations]
    arrows = q.arrows
    stack = [[i] for i in range(len(arrows))]
    while stack:
        seq = stack.pop()
        if len(seq) < n:
            last = arrows[seq[-1]].target
            stack.extend(seq + [j] for j in range(len(arrows))
                         if arrows[j].source == last)
            continue
        word = tuple(arrows[i].name for i in seq)
        if any(word[i:i + len(r)] == r for r in rels for i in range(n - len(r) + 1)):
            continue
        per[arrows[seq[-1]].target] += 1
    return PathCountVector(n, per, sum(per.values()))


# --- circuits -----------------------------------------------------------

@dataclass(frozen=True)
class Circuit:
    states: tuple[int, ...]
    arrows: tuple[int, ...]   # arrows[k] labels the edge states[k] -> states[k+1]

    @property
    def length(self) -> int:
        return len(self.states)


def strongly_connected_components(n: int, succ) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ(w))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def _johnson_vertex_cycles(n, adj):
    """Johnson's elementary-circuit enumeration on a simple digraph
    (``adj[v]`` lists distinct successors)."""
    for v in range(n):
        if v in adj[v]:
            yield (v,)
    succ = {v: {w for w in adj[v] if w != v} for v in range(n)}

    def nontrivial_sccs(nodes):
        comps = strongly_connected_components(
            n, lambda v: [w for w in succ[v] if w in nodes] if v in nodes else [])
        return [set(c) for c in comps if len(c) > 1 and c[0] in nodes]

    pending = nontrivial_sccs(set(range(n)))
    while pending:
        comp = pending.pop()
        start = min(comp)
        path = [start]
        blocked = {start}
        closed = set()
        bmap: dict[int, set] = {v: set() for v in comp}
        stack = [(start, sorted(succ[start] & comp, reverse=True))]
        while stack:
            node, nbrs = stack[-1]
            if nbrs:
                nxt = nbrs.pop()
                if nxt == start:
                    yield tuple(path)
                    closed.update(path)
                elif nxt not in blocked:
                    path.append(nxt)
                    stack.append((nxt, sorted(succ[nxt] & comp, reverse=True)))
                    closed.discard(nxt)
                    blocked.add(nxt)
                    continue
            if not nbrs:
                if node in closed:
                    todo = {node}
                    while todo:
                        x = todo.pop()
                        if x in blocked:
                            blocked.discard(x)
                            todo |= bmap[x]
                            bmap[x].clear()
                else:
                    for w in succ[node] & comp:
                        bmap[w].add(node)
                stack.pop()
                path.pop()
        pending.extend(nontrivial_sccs(comp - {start}))


def simple_circuits(g: UfnarovskiGraph, limit: int = 10_000) -> list[Circuit]:
    """All simple circuits of ``g``, parallel edges counted separately.

    Each circuit is reported once, rotated to start at its smallest state.
    """
    n = g.n_states
    labels: dict[tuple[int, int], list[int]] = {}
    for u, v, a in g.transitions:
        labels.setdefault((u, v), []).append(a)
    adj = [sorted({v for (u, v) in labels if u == s}) for s in range(n)]
    out = []
    for cyc in _johnson_vertex_cycles(n, adj):
        k = cyc.index(min(cyc))
        cyc = cyc[k:] + cyc[:k]
        edges = [labels[(cyc[i], cyc[(i + 1) % len(cyc)])] for i in range(len(cyc))]
        for choice in itertools.product(*edges):
            out.append(Circuit(cyc, tuple(choice)))
            if len(out) > limit:
                raise GuardError(f"more than {limit} simple circuits")
    out.sort(key=lambda c: (c.states, c.arrows))
    return out


def _components(g: UfnarovskiGraph):
    comps = strongly_connected_components(g.n_states, g.successors)
    comp_of = [0] * g.n_states
    for k, c in enumerate(comps):
        for v in c:
            comp_of[v] = k
    edges_in = [0] * len(comps)
    for u, v, _ in g.transitions:
        if comp_of[u] == comp_of[v]:
            edges_in[comp_of[u]] += 1
    return comps, comp_of, edges_in


def has_shared_circuits(g: UfnarovskiGraph) -> bool:
    """True iff two distinct simple circuits share a state.

    A strongly connected component is a single circuit exactly when it has
    as many internal edges as states; any extra edge closes a second
    circuit through a state of the first.
    """
    comps, _, edges_in = _components(g)
    return any(e > len(c) for c, e in zip(comps, edges_in))


def circuit_chain_depth(g: UfnarovskiGraph):
    """Largest number of circuits met by one directed walk, or
    :data:`EXPONENTIAL` when two circuits share a state."""
    comps, comp_of, edges_in = _components(g)
    if any(e > len(c) for c, e in zip(comps, edges_in)):
        return EXPONENTIAL
    cyclic = [e == len(c) for c, e in zip(comps, edges_in)]
    succ_c = [set() for _ in comps]
    for u, v, _ in g.transitions:
        if comp_of[u] != comp_of[v]:
            succ_c[comp_of[u]].add(comp_of[v])
    # Tarjan emits sinks first, so successors are finished before sources
    depth = [0] * len(comps)
    for k in range(len(comps)):
        depth[k] = int(cyclic[k]) + max((depth[j] for j in succ_c[k]), default=0)
    return max(depth, default=0)


# --- export -------------------------------------------------------------

def to_dot(g: UfnarovskiGraph) -> str:
    lines = ["digraph ufnarovski {"]
    for s in range(g.n_states):
        lines.append(f'  s{s} [label="{g.state_label(s)}"];')
    for u, v, a in g.transitions:
        lines.append(f'  s{u} -> s{v} [label="{g.quiver.arrows[a].name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_dict(g: UfnarovskiGraph) -> dict:
    q = g.quiver
    return {
        "state_length": g.state_len,
        "states": [{"word": g.state_label(s), "endpoint": q.vertices[g.endpoints[s]]}
                   for s in range(g.n_states)],
        "transitions": [{"source": g.state_label(u), "target": g.state_label(v),
                         "arrow": q.arrows[a].name} for u, v, a in g.transitions],
    }


def to_json(g: UfnarovskiGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True)


def counts_csv(vectors: list[PathCountVector], vertices) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", *vertices, "total"])
    for v in vectors:
        w.writerow([v.m, *(v.counts[x] for x in vertices), v.total])
    return buf.getvalue()
