# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""int64 versions of the counting kernels.

Both raise OverflowError instead of wrapping; callers fall back to the
arbitrary-precision implementations.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, INT64_MAX

cnp.import_array()

# tables are only accepted below this bound so ceil(x / y) cannot overflow
SAFE_MAX = 1 << 62


def walk_table(indptr, indices, start, Py_ssize_t steps):
    cdef int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef Py_ssize_t n = len(start)
    out_arr = np.zeros((steps + 1, n), dtype=np.int64)
    cdef int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t s, k, t, step
    cdef int64_t v
    for s in range(n):
        if start[s] < 0 or start[s] >= SAFE_MAX:
            raise OverflowError("start vector outside int64 range")
        out[0, s] = start[s]
    for step in range(steps):
        for s in range(n):
            v = out[step, s]
            if v == 0:
                continue
            for k in range(ip[s], ip[s + 1]):
                t = ix[k]
                if out[step + 1, t] > SAFE_MAX - v:
                    raise OverflowError("walk count exceeds int64 range")
                out[step + 1, t] += v
    return out_arr


def rank_scan(table, ns, dmaxes):
    cdef int64_t[:, ::1] tab = np.ascontiguousarray(table, dtype=np.int64)
    cdef Py_ssize_t ncols = tab.shape[1]
    cdef Py_ssize_t j, d, n, dmax
    cdef int64_t x, y, q, worst, best, best_d
    cdef bint ok
    res = []
    for n, dmax in zip(ns, dmaxes):
        if n + dmax >= tab.shape[0]:
            raise IndexError("table too short for requested n + dmax")
        best = -1
        best_d = -1
        for d in range(dmax + 1):
            worst = 0
            ok = True
            for j in range(ncols):
                x = tab[n + d, j]
                y = tab[d, j]
                if y == 0:
                    if x != 0:
                        ok = False
                        break
                    continue
                q = (x + y - 1) // y
                if q > worst:
                    worst = q
                    if best >= 0 and worst >= best:
                        ok = False
                        break
            if ok and (best < 0 or worst < best):
                best = worst
                best_d = d
        res.append((best, best_d))
    return res
