"""Entropy and polynomial-entropy estimates from positive integer sequences."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

POLY_THRESHOLD = 1e-2


@dataclass(frozen=True)
class SequenceEstimate:
    h: float
    hpol: float
    window: tuple[int, int]          # first and last n of the tail window
    residual: float                  # max abs residual of the hpol fit
    mode: str

    def to_dict(self) -> dict:
        return {"h": self.h, "hpol": self.hpol, "window": list(self.window),
                "residual": self.residual, "mode": self.mode}


def tail_window(N: int, fraction: float = 0.25) -> int:
    return max(2, int(N * fraction))


def entropy_from_sequence(vals, mode: str = "auto", start: int = 1,
                          fraction: float = 0.25, min_len: int = 40) -> SequenceEstimate:
    """Estimate ``h`` and ``hpol`` for ``v(n) = vals[n - start]``.

    ``h`` is the mean one-step log ratio over the tail window, i.e.
    ``(log v(N) - log v(N - W)) / W``; this cancels the constant factor that
    makes ``log v(n) / n`` converge slowly.  ``hpol`` is the least-squares
    slope of ``log v(n) - n h`` against ``log n`` on the same window; in
    ``auto`` mode ``h`` below 0.01 is treated as zero.
    """
    vals = list(vals)
    if len(vals) < min_len:
        raise ValueError(f"need at least {min_len} values, got {len(vals)}")
    if any(v <= 0 for v in vals):
        raise ValueError("values must be positive")
    if start < 1:
        raise ValueError("indices must start at n >= 1")
    if mode not in ("auto", "exponential", "polynomial"):
        raise ValueError(f"unknown mode {mode!r}")
    N = len(vals)
    W = tail_window(N, fraction)
    logs = [math.log(v) for v in vals]
    h = (logs[-1] - logs[-1 - W]) / W
    if mode == "polynomial" or (mode == "auto" and h < POLY_THRESHOLD):
        h_used = 0.0
        used = "polynomial"
    else:
        h_used = h
        used = "exponential"
    idx = range(N - W - 1, N)
    x = np.array([math.log(start + k) for k in idx])
    y = np.array([logs[k] - (start + k) * h_used for k in idx])
    slope, icept = np.polyfit(x, y, 1)
    resid = float(np.max(np.abs(y - (slope * x + icept))))
    return SequenceEstimate(h, float(slope), (start + N - W - 1, start + N - 1), resid, used)
