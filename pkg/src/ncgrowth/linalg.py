"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``{index: Fraction}`` with no zero entries; indices only
need to be hashable and mutually comparable.
"""

from __future__ import annotations

from fractions import Fraction


def axpy(y: dict, a, x: dict) -> None:
    """In place ``y += a * x``."""
    for k, v in x.items():
        c = y.get(k, 0) + a * v
        if c:
            y[k] = c
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally maintained row echelon basis.

    Each stored row has its largest index as pivot with coefficient 1 and no
    other row shares that pivot.  ``add`` optionally tracks the combination
    of inserted vectors producing each row, which is how kernels are found.
    """

    def __init__(self):
        self.rows: dict = {}      # pivot -> row
        self.tags: dict = {}      # pivot -> combination of inputs

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict, tag: dict | None = None):
        v = dict(v)
        tag = dict(tag) if tag is not None else None
        while v:
            p = max(v)
            row = self.rows.get(p)
            if row is None:
                break
            c = -v[p]
            axpy(v, c, row)
            if tag is not None:
                axpy(tag, c, self.tags[p])
        return v, tag

    def add(self, v: dict, tag: dict | None = None):
        """Insert ``v``; return ``None`` if it was independent, else the
        tag combination that reduces it to zero."""
        v, tag = self.reduce(v, tag)
        if not v:
            return tag if tag is not None else {}
        p = max(v)
        inv = Fraction(1) / v[p]
        self.rows[p] = {k: c * inv for k, c in v.items()}
        if tag is not None:
            self.tags[p] = {k: c * inv for k, c in tag.items()}
        return None

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def kernel(vectors) -> list[dict]:
    """Basis of ``{c : sum(c[i] * vectors[i]) == 0}`` as sparse dicts over
    positions."""
    e = Echelon()
    out = []
    for i, v in enumerate(vectors):
        rel = e.add(v, {i: Fraction(1)})
        if rel is not None:
            out.append(rel)
    return out
