"""Reference implementations of the counting kernels (arbitrary precision)."""


def walk_table(indptr, indices, start, steps):
    """Rows ``v_0 = start``, ``v_{k+1}[t] = sum of v_k[s] over edges s -> t``.

    The graph is given in CSR form by source: the successors of ``s`` are
    ``indices[indptr[s]:indptr[s + 1]]`` (repeats allowed).
    """
    n = len(start)
    cur = [int(x) for x in start]
    out = [cur]
    for _ in range(steps):
        nxt = [0] * n
        for s in range(n):
            v = cur[s]
            if v:
                for k in range(indptr[s], indptr[s + 1]):
                    nxt[indices[k]] += v
        out.append(nxt)
        cur = nxt
    return out


def rank_scan(table, ns, dmaxes):
    """For each ``(n, dmax)`` minimise over ``0 <= d <= dmax`` the value
    ``max_j ceil(table[n + d][j] / table[d][j])``.

    A column with ``table[d][j] == 0`` contributes 0 when ``table[n + d][j]``
    is also 0 and disqualifies ``d`` otherwise.  Returns ``(r, d)`` pairs
    with the smallest minimising ``d``; ``(-1, -1)`` if every ``d`` is
    disqualified.
    """
    out = []
    for n, dmax in zip(ns, dmaxes):
        best, best_d = -1, -1
        for d in range(dmax + 1):
            top, bot = table[n + d], table[d]
            worst = 0
            ok = True
            for x, y in zip(top, bot):
                if y == 0:
                    if x:
                        ok = False
                        break
                    continue
                q = -(-x // y)
                if q > worst:
                    worst = q
                    if best >= 0 and worst >= best:
                        ok = False
                        break
            if ok and (best < 0 or worst < best):
                best, best_d = worst, d
        out.append((best, best_d))
    return out
