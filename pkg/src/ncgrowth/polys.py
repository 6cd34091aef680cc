"""Exact univariate polynomial helpers.

Polynomials are lists of coefficients, constant term first.  Integer and
``Fraction`` coefficients mix freely; results are trimmed of trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def scale(p, c):
    return trim([c * a for a in p])


def sub(p, q):
    return add(p, scale(q, -1))


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    for k in range(len(p) - len(q), -1, -1):
        c = rem[k + len(q) - 1] / lead
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return trim(quo), trim(rem[:len(q) - 1])


def primitive(p):
    """Scale to coprime integer coefficients with positive leading term."""
    p = trim([Fraction(c) for c in p])
    if not p:
        return []
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    return [-c for c in ints] if ints[-1] < 0 else ints


def gcd_poly(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return primitive(p)


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def reverse(p, deg: int | None = None):
    """``z^deg p(1/z)``; ``deg`` defaults to the degree of ``p``."""
    p = trim(p)
    if deg is None:
        deg = len(p) - 1
    p = p + [0] * (deg + 1 - len(p))
    return trim(p[::-1])


def series_inverse_mul(num, den, n_terms):
    """First ``n_terms`` coefficients of ``num / den`` (``den[0] != 0``)."""
    out = []
    d0 = Fraction(den[0])
    for n in range(n_terms):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return [int(c) if c.denominator == 1 else c for c in out]


def berlekamp_massey(seq):
    """Shortest linear recurrence of an exact sequence.

    Returns ``(C, L)`` with ``C[0] == 1`` and
    ``sum(C[i] * seq[n - i]) == 0`` for every ``L <= n < len(seq)``.
    ``C`` has integer coefficients (scaled when needed).
    """
    s = [Fraction(x) for x in seq]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n in range(len(s)):
        d = s[n] + sum(C[i] * s[n - i] for i in range(1, min(len(C), n + 1)))
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        shifted = [Fraction(0)] * m + [coef * x for x in B]
        C = C + [Fraction(0)] * max(0, len(shifted) - len(C))
        for i, x in enumerate(shifted):
            C[i] -= x
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    C = trim(C)
    den = lcm(*(c.denominator for c in C))
    return [int(c * den) for c in C], L


def charpoly(matrix):
    """Characteristic polynomial ``det(t I - M)`` of a square integer matrix,
    by Berkowitz's division-free recursion."""
    def vec(M):
        n = len(M)
        if n == 1:
            return [1, -M[0][0]]
        a, R = M[0][0], M[0][1:]
        C = [M[i][0] for i in range(1, n)]
        A = [row[1:] for row in M[1:]]
        col = [1, -a]
        d = C
        for _ in range(n - 1):
            col.append(-sum(r * x for r, x in zip(R, d)))
            d = [sum(A[i][j] * d[j] for j in range(n - 1)) for i in range(n - 1)]
        sub = vec(A)
        return [sum(col[i - j] * sub[j] for j in range(min(i, n - 1) + 1))
                for i in range(n + 1)]

    if not matrix:
        return [1]
    return vec([list(r) for r in matrix])[::-1]


# --- real roots ---------------------------------------------------------

def squarefree(p):
    g = gcd_poly(p, derivative(p))
    if len(g) <= 1:
        return primitive(p)
    return primitive(divmod_poly(p, g)[0])


def _content_free(p):
    """Divide out the rational content, keeping the sign."""
    p = trim([Fraction(c) for c in p])
    if not p:
        return []
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def sturm_sequence(p):
    seq = [_content_free(p), _content_free(derivative(p))]
    while len(seq[-1]) > 1:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append(_content_free(scale(r, -1)))
    return seq


def _sign_changes(seq, x) -> int:
    signs = []
    for q in seq:
        v = evaluate(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo, hi, seq=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = seq or sturm_sequence(squarefree(p))
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p) -> Fraction:
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def largest_real_root(p, width=Fraction(1, 10**13)):
    """Isolating interval ``(lo, hi)`` of the largest real root, ``hi - lo <= width``.

    Returns ``None`` when ``p`` has no real root.  If a bisection point hits
    the root exactly, ``lo == hi``.
    """
    q = squarefree(p)
    if len(q) <= 1:
        return None
    seq = sturm_sequence(q)
    B = root_bound(q)
    lo, hi = -B, B
    if count_roots(q, lo, hi, seq) == 0:
        return None
    # isolate the largest root: shrink lo until exactly one root in (lo, hi]
    while count_roots(q, lo, hi, seq) > 1:
        mid = (lo + hi) / 2
        if count_roots(q, mid, hi, seq) >= 1:
            lo = mid
        else:
            hi = mid
    if evaluate(q, hi) == 0:
        return hi, hi
    s_hi = evaluate(q, hi) > 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = evaluate(q, mid)
        if v == 0:
            return mid, mid
        if (v > 0) == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi


def has_root_above(p, x) -> bool:
    q = squarefree(p)
    if len(q) <= 1:
        return False
    return count_roots(q, x, root_bound(q)) > 0


def format_poly(p, var="t") -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else "+"
            terms.append(f"{coef} {mono}")
        else:
            terms.append(f"{'-' if c < 0 else '+'} {abs(c)}{mono}")
    s = " ".join(terms) or "0"
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
