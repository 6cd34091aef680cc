"""Acceptance suite: one check per criterion at its stated tolerance.

Each test prints a single PASS/FAIL line; the records carry the measured
values and are shared with ``ncgrowth verify --all``.
"""

import pytest

from ncgrowth.verify import CRITERIA, run_criterion

RESULTS = []


@pytest.mark.parametrize("claim_id", list(CRITERIA))
def test_criterion(claim_id):
    rec = run_criterion(claim_id)
    RESULTS.append(rec)
    print(f"\n{rec.line()}  [{rec.runtime:.2f}s]")
    assert rec.status == "pass", "; ".join(rec.failures)
