"""Hot loops of the word-counting and rank computations.

The compiled module ``_ckernels`` is used when it was built and the numbers
fit in int64; otherwise the pure-Python reference in ``_pykernels`` runs.
Set ``NCGROWTH_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

_c = None
if not os.environ.get("NCGROWTH_PURE_PYTHON"):
    try:
        from . import _ckernels as _c
    except ImportError:  # extension not built
        _c = None

BACKEND = "cython" if _c is not None else "python"
SAFE_MAX = 1 << 62


def walk_table(indptr, indices, start, steps):
    if _c is not None:
        try:
            return _c.walk_table(indptr, indices, start, steps).tolist()
        except OverflowError:
            pass
    return _pykernels.walk_table(indptr, indices, start, steps)


def rank_scan(table, ns, dmaxes):
    if _c is not None and table and table[0] and \
            max(max(row) for row in table) < SAFE_MAX:
        return _c.rank_scan(table, ns, dmaxes)
    return _pykernels.rank_scan(table, ns, dmaxes)
