import importlib
import random

import pytest

from ncgrowth import _kernels
from ncgrowth._kernels import _pykernels

try:
    from ncgrowth._kernels import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="Cython extension not built")


def _random_graph(rng, n):
    indptr, indices = [0], []
    for _ in range(n):
        indices.extend(rng.randrange(n) for _ in range(rng.randint(0, 3)))
        indptr.append(len(indices))
    return indptr, indices


@needs_c
@pytest.mark.parametrize("seed", range(25))
def test_walk_table_equivalence(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    indptr, indices = _random_graph(rng, n)
    start = [rng.randint(0, 3) for _ in range(n)]
    a = _pykernels.walk_table(indptr, indices, start, 15)
    b = _ckernels.walk_table(indptr, indices, start, 15).tolist()
    assert a == b


@needs_c
@pytest.mark.parametrize("seed", range(25))
def test_rank_scan_equivalence(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    indptr, indices = _random_graph(rng, n)
    table = _pykernels.walk_table(indptr, indices, [1] * n, 28)
    ns = list(range(1, 15))
    dm = [rng.randint(0, 14) for _ in ns]
    assert _pykernels.rank_scan(table, ns, dm) == list(_ckernels.rank_scan(table, ns, dm))


@needs_c
def test_overflow_falls_back():
    # 3^50 does not fit in int64; the dispatcher must return exact values
    out = _kernels.walk_table([0, 3], [0, 0, 0], [1], 50)
    assert out[50] == [3 ** 50]
    with pytest.raises(OverflowError):
        _ckernels.walk_table([0, 3], [0, 0, 0], [1], 50)


def test_rank_scan_disqualified_and_zero_columns():
    table = [[1, 0], [1, 0], [2, 0], [3, 0]]
    assert _pykernels.rank_scan(table, [1], [1]) == [(1, 0)]
    assert _pykernels.rank_scan([[0], [1]], [1], [0]) == [(-1, -1)]


def test_pure_python_switch(monkeypatch):
    monkeypatch.setenv("NCGROWTH_PURE_PYTHON", "1")
    mod = importlib.reload(_kernels)
    try:
        assert mod.BACKEND == "python"
        assert mod.walk_table([0, 2], [0, 0], [1], 3) == [[1], [2], [4], [8]]
    finally:
        monkeypatch.delenv("NCGROWTH_PURE_PYTHON")
        importlib.reload(_kernels)
