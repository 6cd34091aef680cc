"""Compare the compiled and pure-Python counting kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--n 200]
"""

import argparse
import statistics
import time

from ncgrowth._kernels import _pykernels
from ncgrowth.automaton import build_ufnarovski
from ncgrowth.catalog import example52, two_cycle_tail, yx_algebra
from ncgrowth.sampling import random_monomial

try:
    from ncgrowth._kernels import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def cases():
    yield "example52", build_ufnarovski(example52())
    yield "yx", build_ufnarovski(yx_algebra())
    yield "two_cycle_tail", build_ufnarovski(two_cycle_tail())
    for seed in (3, 11):
        yield f"random[{seed}]", build_ufnarovski(random_monomial(seed, vmax=6, amax=10))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=200)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'case':<16}{'states':>7}  {'kernel':<11}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for name, g in cases():
        n = args.n
        ns = list(range(1, n + 1))
        dm = [2 * k + g.n_states for k in ns]
        steps = max(a + b for a, b in zip(ns, dm))
        table = _pykernels.walk_table(g.indptr, g.indices, [1] * g.n_states, steps)
        work = {
            "walk_table": (lambda m: m.walk_table(g.indptr, g.indices, [1] * g.n_states, steps)),
            "rank_scan": (lambda m: m.rank_scan(table, ns, dm)),
        }
        for kname, fn in work.items():
            tp = _time(lambda: fn(_pykernels), args.repeat)
            if _ckernels is not None:
                if kname == "walk_table":
                    ref = _pykernels.walk_table(g.indptr, g.indices, [1] * g.n_states, steps)
                    assert fn(_ckernels).tolist() == ref
                else:
                    assert list(fn(_ckernels)) == fn(_pykernels)
                tc = _time(lambda: fn(_ckernels), args.repeat)
                print(f"{name:<16}{g.n_states:>7}  {kname:<11}{tp:>10.4f}{tc:>10.4f}{tp / tc:>8.1f}x")
            else:
                print(f"{name:<16}{g.n_states:>7}  {kname:<11}{tp:>10.4f}{'-':>10}{'-':>9}")


if __name__ == "__main__":
    main()
