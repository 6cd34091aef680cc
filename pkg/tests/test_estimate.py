import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncgrowth.estimate import entropy_from_sequence, tail_window


def test_exponential_exact():
    est = entropy_from_sequence([2 ** n for n in range(1, 101)])
    assert est.h == pytest.approx(math.log(2), abs=1e-12)
    assert est.mode == "exponential"
    assert abs(est.hpol) < 1e-6


def test_fibonacci():
    f = [1, 2]
    while len(f) < 120:
        f.append(f[-1] + f[-2])
    est = entropy_from_sequence(f)
    assert est.h == pytest.approx(math.log((1 + 5 ** 0.5) / 2), abs=1e-10)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_polynomial_degree(k):
    est = entropy_from_sequence([(n + 1) ** k for n in range(1, 401)])
    assert est.mode == "polynomial"
    assert est.hpol == pytest.approx(k, abs=0.05)


def test_constant_sequence():
    est = entropy_from_sequence([7] * 50)
    assert est.h == 0 and est.hpol == pytest.approx(0, abs=1e-12)


@given(st.integers(2, 40), st.integers(40, 200))
def test_scaling_invariance(c, N):
    base = [3 ** n for n in range(1, N + 1)]
    a = entropy_from_sequence(base)
    b = entropy_from_sequence([c * v for v in base])
    assert a.h == pytest.approx(b.h, abs=1e-12)


def test_validation():
    with pytest.raises(ValueError):
        entropy_from_sequence([1] * 10)
    with pytest.raises(ValueError):
        entropy_from_sequence([0] * 50)
    with pytest.raises(ValueError):
        entropy_from_sequence([1] * 50, mode="bogus")
    assert tail_window(200) == 50 and tail_window(3) == 2
