"""Ranks of Serre twists of monomial algebras.

The automaton graph stands in for the algebra: its path algebra ``B`` has
``B_{>=m} = (+)_j P_j^{b_j^m}(-m)``, where ``b_j^m`` counts paths of length
``m`` ending at state ``j``.  A surjection ``B_{>=d}^r -> B_{>=n+d}(n)``
exists as soon as ``r * b_j^d >= b_j^{n+d}`` for every ``j``, which gives a
constructive upper bound on the rank of the twist ``B(n)``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from . import _kernels
from .automaton import (EXPONENTIAL, GuardError, UfnarovskiGraph,
                        circuit_chain_depth, count_normal_words, state_walk_table)
from .estimate import entropy_from_sequence, tail_window
from .growth import GrowthReport

RANK_LABEL = "rank (constructive upper bound)"


class SerreError(ValueError):
    pass


@dataclass(frozen=True)
class TruncationDecomposition:
    m: int
    multiplicities: dict          # vertex name -> b_j^m

    def __str__(self) -> str:
        parts = [f"P_{v}^{c}" for v, c in self.multiplicities.items() if c]
        return " + ".join(parts) + f" ({-self.m})" if parts else "0"


def truncation_decomposition(g: UfnarovskiGraph, m: int) -> TruncationDecomposition:
    """Multiplicities of the indecomposable projectives in ``A_{>=m}(m)``."""
    if m < 0:
        raise SerreError("m must be >= 0")
    return TruncationDecomposition(m, dict(count_normal_words(g, m)[m].counts))


def rank_upper(g: UfnarovskiGraph, n: int, d_max: int, table=None) -> tuple[int, int]:
    """``min_{0 <= d <= d_max} max_j ceil(b_j^{n+d} / b_j^d)`` and the
    smallest minimising ``d``.

    A state with ``b_j^d = 0 < b_j^{n+d}`` disqualifies ``d``; a state with
    both counts zero contributes nothing.
    """
    if n < 0 or d_max < 0:
        raise SerreError("n and d_max must be >= 0")
    if table is None:
        table = state_walk_table(g, n + d_max)
    (r, d), = _kernels.rank_scan(table, [n], [d_max])
    if r < 0:
        raise SerreError(f"every shift d <= {d_max} is disqualified at n = {n}")
    return r, d


def default_d_max(g: UfnarovskiGraph, n: int) -> int:
    return 2 * n + g.n_states


@dataclass(frozen=True)
class RankSequence:
    values: tuple[int, ...]        # r(1..N)
    witnesses: tuple[int, ...]
    d_max: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.values)

    def r(self, n: int) -> int:
        if n == 0:
            return 1
        return self.values[n - 1]

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "r", "witness_d"])
        for n, (r, d) in enumerate(zip(self.values, self.witnesses), start=1):
            w.writerow([n, r, d])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"label": RANK_LABEL, "values": list(self.values),
                "witnesses": list(self.witnesses), "d_max": list(self.d_max)}


def rank_sequence(g: UfnarovskiGraph, N: int, d_policy=None) -> RankSequence:
    """``r(n)`` for ``n = 1..N``; ``d_policy(g, n)`` gives the shift range
    (default ``2n + |states|``)."""
    if N < 1:
        raise SerreError("N must be >= 1")
    policy = d_policy or default_d_max
    ns = list(range(1, N + 1))
    dm = [policy(g, n) for n in ns]
    table = state_walk_table(g, max(n + d for n, d in zip(ns, dm)))
    res = _kernels.rank_scan(table, ns, dm)
    for n, (r, _) in zip(ns, res):
        if r < 0:
            raise SerreError(f"every shift is disqualified at n = {n}")
    return RankSequence(tuple(r for r, _ in res), tuple(d for _, d in res), tuple(dm))


@dataclass(frozen=True)
class EntropyReport:
    h_estimate: float
    h_max_deviation: float
    hpol_estimate: float | None
    hpol_verdict: str               # "exact-0" or "estimate"
    bound_C: int | None
    h_reference: float
    gk_dim: float
    h_ok: bool
    hpol_ok: bool | None
    window: tuple[int, int]
    tol: float
    ranks: tuple[int, ...]

    @property
    def hpol_value(self) -> float | None:
        return 0.0 if self.hpol_verdict == "exact-0" else self.hpol_estimate

    def to_dict(self) -> dict:
        gk = "inf" if self.gk_dim == math.inf else self.gk_dim
        href = "-inf" if self.h_reference == -math.inf else self.h_reference
        return {"h_estimate": self.h_estimate, "h_max_deviation": self.h_max_deviation,
                "hpol_estimate": self.hpol_estimate, "hpol_verdict": self.hpol_verdict,
                "bound_C": self.bound_C, "growth": {"h": href, "gk_dim": gk},
                "h_ok": self.h_ok, "hpol_ok": self.hpol_ok, "window": list(self.window),
                "tol": self.tol, "label": RANK_LABEL, "ranks": list(self.ranks)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def serre_entropy_report(rs: RankSequence, growth: GrowthReport,
                         tol: float = 0.05, min_n: int = 40) -> EntropyReport:
    """Tail-window estimates of the entropy and polynomial entropy of the
    twist sequence, compared with the algebra's growth invariants."""
    N = rs.N
    if N < min_n:
        raise SerreError(f"need N >= {min_n} for the tail window, got {N}")
    W = tail_window(N)
    ns = range(N - W + 1, N + 1)
    per = [math.log(rs.r(n)) / n for n in ns]
    h = sum(per) / len(per)
    dev = max(abs(x - h) for x in per)
    tail = [rs.r(n) for n in ns]
    const = len(set(tail)) == 1
    if const:
        C, verdict, hpol = tail[0], "exact-0", None
    else:
        est = entropy_from_sequence(rs.values, min_len=min_n)
        C, verdict, hpol = None, "estimate", est.hpol
    href = growth.entropy_value
    h_ok = h <= max(href, 0.0) + tol
    hpol_ok = None
    if growth.classification == "polynomial":
        hv = 0.0 if const else hpol
        hpol_ok = hv <= growth.gk_dim - 1 + tol
    return EntropyReport(h, dev, hpol, verdict, C, href, growth.gk_dim, h_ok, hpol_ok,
                         (ns.start, ns.stop - 1), tol, tuple(rs.values))


def shift_inequality_constant(g: UfnarovskiGraph, m_max: int = 100, d_max: int = 50,
                              guard: int = 10**6) -> int:
    """Smallest ``N`` with ``N b_i^{m+d} >= b_i^m`` for every state ``i``,
    ``|states| <= m <= m_max`` and ``1 <= d <= d_max``."""
    if circuit_chain_depth(g) == EXPONENTIAL:
        raise SerreError("shift inequality needs polynomial growth")
    table = state_walk_table(g, m_max + d_max)
    best = 1
    for m in range(g.n_states, m_max + 1):
        for d in range(1, d_max + 1):
            for lo, hi in zip(table[m + d], table[m]):
                if hi == 0:
                    continue
                if lo == 0:
                    raise GuardError(f"b^{m + d} = 0 < b^{m} at some state; no finite N")
                best = max(best, -(-hi // lo))
                if best > guard:
                    raise GuardError(f"shift constant exceeds guard {guard}")
    return best
