"""Seeded random monomial presentations for property tests."""

from __future__ import annotations

import random

from .automaton import EXPONENTIAL, build_ufnarovski, circuit_chain_depth
from .model import MonomialPresentation, Quiver


class BudgetExhausted(RuntimeError):
    pass


def _random_path(rng: random.Random, q: Quiver, length: int):
    out = [rng.randrange(len(q.arrows))]
    while len(out) < length:
        end = q.target_of(out[-1])
        succ = [a for a in range(len(q.arrows)) if q.source_of(a) == end]
        if not succ:
            return None
        out.append(rng.choice(succ))
    return q.path_of_word(out)


def _draw(rng: random.Random, vmax, amax, rmax, lmax) -> MonomialPresentation:
    nv = rng.randint(1, vmax)
    na = rng.randint(1, amax)
    verts = [f"v{i}" for i in range(1, nv + 1)]
    arrows = [(f"a{i}", rng.choice(verts), rng.choice(verts)) for i in range(1, na + 1)]
    q = Quiver.build(verts, arrows)
    rels = []
    for _ in range(rng.randint(0, rmax)):
        p = _random_path(rng, q, rng.randint(2, max(2, lmax)))
        if p is not None:
            rels.append(p)
    return MonomialPresentation.reduced(q, rels)


def random_monomial(seed: int, vmax: int = 4, amax: int = 6, rmax: int = 4,
                    lmax: int = 4, want_polynomial: bool = True,
                    budget: int = 10_000) -> MonomialPresentation:
    """Random monomial presentation with at most ``vmax`` vertices,
    ``amax`` arrows and ``rmax`` relations of length ``<= lmax``.

    With ``want_polynomial`` draws are rejected until the algebra is
    infinite-dimensional of polynomial growth.
    """
    if min(vmax, amax, lmax) < 1 or rmax < 0 or lmax < 2:
        raise ValueError("bounds must be positive (lmax >= 2)")
    rng = random.Random(seed)
    if not want_polynomial:
        return _draw(rng, vmax, amax, rmax, lmax)
    for _ in range(budget):
        mp = _draw(rng, vmax, amax, rmax, lmax)
        depth = circuit_chain_depth(build_ufnarovski(mp))
        if depth != EXPONENTIAL and depth >= 1:
            return mp
    raise BudgetExhausted(f"no polynomial-growth presentation within {budget} draws")
