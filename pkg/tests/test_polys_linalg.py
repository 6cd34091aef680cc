import random
from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from ncgrowth import linalg, polys

small_ints = st.integers(min_value=-5, max_value=5)


@given(st.lists(small_ints, min_size=1, max_size=4), st.lists(st.integers(0, 9), min_size=4, max_size=8))
def test_berlekamp_massey_recovers_recurrence(rec, init):
    seq = list(init[: len(rec)])
    while len(seq) < 4 * len(rec) + 4:
        seq.append(sum(c * seq[-1 - i] for i, c in enumerate(rec)))
    C, L = polys.berlekamp_massey(seq)
    assert L <= len(rec)
    for n in range(L, len(seq)):
        assert sum(C[i] * seq[n - i] for i in range(len(C))) == 0


@given(st.integers(1, 5), st.integers(0, 1000))
def test_charpoly_matches_sympy(n, seed):
    rng = random.Random(seed)
    M = [[rng.randint(0, 2) for _ in range(n)] for _ in range(n)]
    t = sympy.Symbol("t")
    ours = polys.charpoly(M)
    ref = sympy.Matrix(M).charpoly(t).all_coeffs()[::-1]
    assert [Fraction(c) for c in ours] == [Fraction(int(c)) for c in ref]


@given(st.lists(small_ints, min_size=2, max_size=6))
def test_largest_real_root_matches_sympy(coeffs):
    p = polys.trim([Fraction(c) for c in coeffs])
    if len(p) < 2:
        return
    roots = [r for r in sympy.Poly(list(reversed(coeffs)), sympy.Symbol("x")).real_roots()]
    got = polys.largest_real_root(p)
    if not roots:
        assert got is None
        return
    lo, hi = got
    r = max(roots)
    assert Fraction(lo) <= sympy.Rational(r.evalf(40)) + Fraction(1, 10**30)
    assert hi - lo <= Fraction(1, 10**13)
    assert abs(float(r) - float(lo)) < 1e-12


def test_series_roundtrip():
    # 1 / (1 - z - z^2): Fibonacci
    assert polys.series_inverse_mul([1], [1, -1, -1], 8) == [1, 1, 2, 3, 5, 8, 13, 21]


@given(st.integers(0, 500))
def test_rank_and_kernel_match_sympy(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    vecs = []
    for _ in range(rows):
        v = {j: Fraction(rng.randint(-2, 2)) for j in range(cols)}
        vecs.append({k: c for k, c in v.items() if c})
    dense = sympy.Matrix([[v.get(j, 0) for j in range(cols)] for v in vecs])
    assert linalg.rank(vecs) == dense.rank()
    ker = linalg.kernel(vecs)
    assert len(ker) == rows - dense.rank()
    for rel in ker:
        total = {}
        for i, c in rel.items():
            linalg.axpy(total, c, vecs[i])
        assert total == {}


def test_echelon_reports_relation():
    E = linalg.Echelon()
    assert E.add({0: Fraction(1), 1: Fraction(1)}, {"a": 1}) is None
    assert E.add({1: Fraction(2)}, {"b": 1}) is None
    rel = E.add({0: Fraction(3), 1: Fraction(5)}, {"c": 1})
    assert rel == {"c": 1, "a": -3, "b": -1}
    assert E.contains({0: Fraction(7)})
