"""Named presentations used throughout the tests and the corpus."""

from __future__ import annotations

from .model import (Arrow, GradedPresentation, MonomialPresentation,
                    NcPolynomial, PresentationError, Quiver)


def free(g: int) -> MonomialPresentation:
    """Free algebra on ``g`` degree-one loops ``x1..xg`` at one vertex."""
    if g < 0:
        raise PresentationError("free(g) needs g >= 0")
    q = Quiver.build(["v"], [(f"x{i}", "v", "v") for i in range(1, g + 1)])
    return MonomialPresentation(q)


def _two_loops(relation: tuple[str, str]) -> MonomialPresentation:
    q = Quiver.build(["v"], [("x", "v", "v"), ("y", "v", "v")])
    return MonomialPresentation(q, (q.path(*relation),))


def xx_algebra() -> MonomialPresentation:
    """k<x, y | xx>; dimensions are Fibonacci numbers."""
    return _two_loops(("x", "x"))


def yx_algebra() -> MonomialPresentation:
    """k<x, y | yx>; normal words are x^a y^b."""
    return _two_loops(("y", "x"))


def example52() -> MonomialPresentation:
    """Loops a at x and c at y joined by b: x -> y; no relations."""
    q = Quiver.build(["x", "y"], [("a", "x", "x"), ("b", "x", "y"),
                                  ("c", "y", "y")])
    return MonomialPresentation(q)


def two_cycle_tail() -> MonomialPresentation:
    """Arrow e: w -> u feeding the 2-cycle p: u -> v, q: v -> u."""
    q = Quiver.build(["w", "u", "v"], [("e", "w", "u"), ("p", "u", "v"),
                                       ("q", "v", "u")])
    return MonomialPresentation(q)


def projective_line(g: int) -> GradedPresentation:
    """k<x1..xg | f> with f of tensor rank g.

    f = sum_i (x_{2i-1} x_{2i} + x_{2i} x_{2i-1}), plus x_g x_g when g is odd.
    """
    if g < 2:
        raise PresentationError("projective_line needs g >= 2")
    q = Quiver.build(["v"], [(f"x{i}", "v", "v") for i in range(1, g + 1)])
    terms = {}
    for i in range(1, g // 2 + 1):
        a, b = f"x{2 * i - 1}", f"x{2 * i}"
        terms[q.path(a, b)] = 1
        terms[q.path(b, a)] = 1
    if g % 2:
        terms[q.path(f"x{g}", f"x{g}")] = 1
    return GradedPresentation(q, (NcPolynomial(terms),))


def kronecker(k: int = 2) -> Quiver:
    return Quiver.build(["v1", "v2"], [(f"a{i}", "v1", "v2") for i in range(1, k + 1)])


def preprojective(quiver: Quiver) -> GradedPresentation:
    """Preprojective algebra of an acyclic quiver.

    Each arrow ``a: i -> j`` gets a partner ``a_star: j -> i``; arrows keep
    degree 0 and partners get degree 1.  The relation sum(a a* - a* a) is
    split into its vertex components, one per vertex.
    """
    if not quiver.is_acyclic():
        raise PresentationError("preprojective algebra needs an acyclic quiver")
    arrows = [Arrow(a.name, a.source, a.target, 0) for a in quiver.arrows]
    arrows += [Arrow(f"{a.name}_star", a.target, a.source, 1) for a in quiver.arrows]
    dq = Quiver(quiver.vertices, tuple(arrows))
    rels = []
    for v in quiver.vertices:
        terms = {}
        for a in quiver.arrows:
            if a.source == v:
                terms[dq.path(a.name, f"{a.name}_star")] = 1
            if a.target == v:
                terms[dq.path(f"{a.name}_star", a.name)] = -1
        if terms:
            rels.append(NcPolynomial(terms))
    return GradedPresentation(dq, tuple(rels))


def _preprojective_from_params(params):
    if not params:
        return preprojective(kronecker(2))
    if len(params) == 1:
        if params[0] < 1:
            raise PresentationError("preprojective([k]) needs k >= 1")
        return preprojective(kronecker(params[0]))
    n, edges = params[0], params[1:]
    if n < 1 or len(edges) % 2:
        raise PresentationError(
            "preprojective params are [k] or [n, s1, t1, s2, t2, ...]")
    verts = [f"v{i}" for i in range(n)]
    arrows = []
    for k in range(0, len(edges), 2):
        s, t = edges[k], edges[k + 1]
        if not (0 <= s < n and 0 <= t < n):
            raise PresentationError(f"edge ({s}, {t}) out of range")
        arrows.append((f"a{k // 2 + 1}", f"v{s}", f"v{t}"))
    return preprojective(Quiver.build(verts, arrows))


def _arity(name, params, n):
    if len(params) != n:
        raise PresentationError(f"{name} takes {n} parameter(s), got {len(params)}")


def builtin_presentation(name: str, params=()):
    params = list(params)
    if name == "free":
        _arity(name, params, 1)
        return free(params[0])
    if name == "projective_line":
        _arity(name, params, 1)
        return projective_line(params[0])
    if name == "preprojective":
        return _preprojective_from_params(params)
    simple = {"example52": example52, "xx_algebra": xx_algebra,
              "yx_algebra": yx_algebra, "two_cycle_tail": two_cycle_tail}
    if name in simple:
        _arity(name, params, 0)
        return simple[name]()
    raise PresentationError(f"unknown builtin presentation {name!r}")


BUILTIN_NAMES = ("free", "projective_line", "example52", "xx_algebra",
                 "yx_algebra", "preprojective", "two_cycle_tail")
