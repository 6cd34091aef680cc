"""Hilbert series, growth entropy, Gelfand-Kirillov dimension and
quasi-polynomial structure of normal-word counts."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce

import numpy as np

from . import polys
from .automaton import (EXPONENTIAL, UfnarovskiGraph, build_ufnarovski,
                        circuit_chain_depth, count_normal_words,
                        simple_circuits, strongly_connected_components)
from .model import MonomialPresentation

ROOT_WIDTH = Fraction(1, 2 * 10**13)


class GrowthError(ValueError):
    pass


class FiniteDimensionalError(GrowthError):
    pass


class InconsistentGrowth(AssertionError):
    """Structural and spectral growth tests disagree (a bug, never expected)."""


@dataclass(frozen=True)
class HilbertData:
    coefficients: tuple[int, ...]
    numerator: tuple[int, ...]        # H(z) = numerator / denominator
    denominator: tuple[int, ...]
    recurrence: tuple[int, ...]       # a_n = sum(recurrence[i-1] * a_{n-i})
    threshold: int                    # recurrence holds for n >= threshold

    def series(self, n_terms: int) -> list:
        return polys.series_inverse_mul(list(self.numerator), list(self.denominator), n_terms)

    def csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "dim"])
        for n, a in enumerate(self.coefficients):
            w.writerow([n, a])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {"coefficients": list(self.coefficients),
                "numerator": list(self.numerator),
                "denominator": list(self.denominator),
                "recurrence": list(self.recurrence),
                "threshold": self.threshold}


def _as_graph(obj) -> UfnarovskiGraph:
    if isinstance(obj, UfnarovskiGraph):
        return obj
    if isinstance(obj, MonomialPresentation):
        return build_ufnarovski(obj)
    raise TypeError(f"expected a monomial presentation or graph, got {type(obj).__name__}")


def rational_form(coeffs, max_order: int) -> HilbertData:
    """Fit ``coeffs`` by a rational function whose recurrence has order at
    most ``max_order``; needs ``len(coeffs) >= 2 * max_order``."""
    if len(coeffs) < 2 * max_order:
        raise GrowthError(
            f"need at least {2 * max_order} coefficients to certify a recurrence "
            f"of order <= {max_order}, got {len(coeffs)}")
    C, L = polys.berlekamp_massey(coeffs)
    num = polys.mul(list(coeffs[:L]), C)[:L]
    num = polys.trim(num)
    g = polys.gcd_poly(num, C) if num else [1]
    if len(g) > 1:
        num = polys.divmod_poly(num, g)[0]
        C = polys.divmod_poly(C, g)[0]
    # normalise to integer coefficients with denominator constant term 1
    c0 = Fraction(C[0])
    num = [Fraction(x) / c0 for x in num]
    C = [Fraction(x) / c0 for x in C]
    if any(x.denominator != 1 for x in num + C):
        raise GrowthError("series does not have an integral rational form")
    num = [int(x) for x in num]
    C = [int(x) for x in C]
    rec = tuple(-c for c in C[1:]) + (0,) * max(0, L - (len(C) - 1))
    if polys.series_inverse_mul(num, C, len(coeffs)) != list(coeffs):
        raise GrowthError("rational form does not reproduce the coefficients")
    return HilbertData(tuple(coeffs), tuple(num), tuple(C), rec, L)


def hilbert_series(mp, N: int) -> HilbertData:
    """Exact Hilbert series of a standard-graded monomial algebra.

    The coefficients come from the normal-word automaton; the rational form
    is the shortest recurrence (Berlekamp-Massey), which is determined once
    ``N + 1 >= 2 * (states + state length)``.
    """
    g = _as_graph(mp)
    if not g.quiver.is_standard:
        raise GrowthError("Hilbert series by word length needs all arrows of degree 1")
    order = g.n_states + g.state_len
    if N + 1 < 2 * order:
        raise GrowthError(f"N = {N} too small to certify the recurrence; "
                          f"need N >= {2 * order - 1}")
    coeffs = [v.total for v in count_normal_words(g, N)]
    return rational_form(coeffs, order)


# --- entropy ----------------------------------------------------------------

@dataclass(frozen=True)
class EntropyValue:
    value: float
    interval: tuple[float, float]          # certified enclosure of the entropy
    root_interval: tuple[Fraction, Fraction]
    factor: tuple[int, ...]                # integer polynomial in t, constant first
    numeric_radius: float | None = None    # floating cross-check

    @property
    def exponent(self) -> float:
        return float((self.root_interval[0] + self.root_interval[1]) / 2)

    def contains(self, x: float) -> bool:
        return self.interval[0] <= x <= self.interval[1]

    def to_dict(self) -> dict:
        return {"value": self.value, "interval": list(self.interval),
                "root_interval": [str(self.root_interval[0]), str(self.root_interval[1])],
                "factor": list(self.factor), "numeric_radius": self.numeric_radius}


def _log_interval(lo: Fraction, hi: Fraction) -> tuple[float, float]:
    a = math.nextafter(math.log(lo), -math.inf)
    b = math.nextafter(math.log(hi), math.inf)
    return a, b


def scc_factors(g: UfnarovskiGraph):
    """For each component with an internal edge: (states, integer factor of
    its characteristic polynomial carrying the Perron root)."""
    out = []
    for comp in strongly_connected_components(g.n_states, g.successors):
        cset = set(comp)
        pos = {s: k for k, s in enumerate(comp)}
        edges = [(pos[u], pos[v]) for u, v, _ in g.transitions if u in cset and v in cset]
        if not edges:
            continue
        indptr = [0]
        indices = []
        for k in range(len(comp)):
            indices.extend(v for u, v in edges if u == k)
            indptr.append(len(indices))
        from . import _kernels
        rows = _kernels.walk_table(indptr, indices, [1] * len(comp), 2 * len(comp) + 1)
        seq = [sum(r) for r in rows]
        C, L = polys.berlekamp_massey(seq)
        factor = polys.primitive(polys.reverse(C))
        out.append((comp, edges, factor))
    return out


def _numeric_radius(n: int, edges) -> float:
    M = np.zeros((n, n))
    for u, v in edges:
        M[u, v] += 1
    return float(max(abs(np.linalg.eigvals(M))))


def _entropy_from_factor(factor, radius=None) -> EntropyValue:
    iv = polys.largest_real_root(factor, ROOT_WIDTH)
    if iv is None:
        raise GrowthError("factor has no real root")
    lo, hi = iv
    log_iv = _log_interval(lo, hi)
    return EntropyValue(float(math.log((lo + hi) / 2)), log_iv, (lo, hi),
                        tuple(factor), radius)


def growth_entropy(data) -> EntropyValue:
    """Certified growth entropy ``log rho``.

    ``rho`` is the largest real root of an exact integer polynomial: the
    Perron factor of the automaton's adjacency matrix, or the reversed
    denominator of a Hilbert series.  The root is isolated by Sturm
    sequences and bisected with exact rationals.
    """
    if isinstance(data, HilbertData):
        if len(data.denominator) <= 1:
            raise FiniteDimensionalError("finite-dimensional algebra has entropy -inf")
        return _entropy_from_factor(polys.primitive(polys.reverse(list(data.denominator))))
    g = _as_graph(data)
    best = None
    for comp, edges, factor in scc_factors(g):
        ev = _entropy_from_factor(factor, _numeric_radius(len(comp), edges))
        if best is None or ev.root_interval[1] > best.root_interval[1]:
            best = ev
    if best is None:
        raise FiniteDimensionalError("finite-dimensional algebra has entropy -inf")
    radius = best.numeric_radius
    lo, hi = best.root_interval
    if radius is not None and not (float(lo) - 1e-7 <= radius <= float(hi) + 1e-7):
        raise InconsistentGrowth(
            f"floating spectral radius {radius} outside certified [{float(lo)}, {float(hi)}]")
    return best


# --- quasi-polynomials ------------------------------------------------------

@dataclass(frozen=True)
class QuasiPolynomial:
    period: int
    polys: tuple[tuple[Fraction, ...], ...]   # polys[r]: coefficients for m = r mod period
    onset: int
    degree: int                                # -1 for the zero function

    def __call__(self, m: int):
        v = polys.evaluate(list(self.polys[m % self.period]), m)
        return int(v) if Fraction(v).denominator == 1 else v

    @property
    def shared_degree(self) -> bool:
        return len({polys.degree(list(p)) for p in self.polys}) == 1

    def to_dict(self) -> dict:
        return {"period": self.period, "onset": self.onset, "degree": self.degree,
                "polys": [[str(c) for c in p] for p in self.polys]}


def _interpolate(points):
    """Exact Lagrange interpolation; returns coefficients constant first."""
    result = []
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = polys.mul(basis, [-xj, 1])
                denom *= xi - xj
        result = polys.add(result, polys.scale(basis, Fraction(yi) / denom))
    return [Fraction(c) for c in result]


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def quasi_polynomial_fit(seq, g: UfnarovskiGraph, degree: int | None = None,
                         max_onset: int | None = None) -> QuasiPolynomial:
    """Fit ``seq[m]`` by a quasi-polynomial whose period divides the lcm of
    the circuit lengths of ``g``.  Every value from the onset to the end of
    ``seq`` is checked for exact equality."""
    depth = circuit_chain_depth(g)
    if depth == EXPONENTIAL:
        raise GrowthError("quasi-polynomial fit needs polynomial growth")
    if degree is None:
        degree = max(depth - 1, 0)
    lengths = [c.length for c in simple_circuits(g)]
    period = reduce(math.lcm, lengths, 1)
    if max_onset is None:
        max_onset = g.n_states + g.state_len + 2 * period
    M = len(seq) - 1
    for T in _divisors(period):
        need = 2 * T * (degree + 1)
        for m0 in range(0, max_onset + 1):
            if M - m0 + 1 < (degree + 1) * T + need:
                break
            fitted = []
            for r in range(T):
                first = m0 + ((r - m0) % T)
                pts = [(m, seq[m]) for m in range(first, first + T * (degree + 1), T)]
                fitted.append(polys.trim(_interpolate(pts)))
            if all(polys.evaluate(fitted[m % T], m) == seq[m] for m in range(m0, M + 1)):
                deg = max((len(p) - 1 for p in fitted), default=-1)
                padded = tuple(tuple(p) if p else (Fraction(0),) for p in fitted)
                return QuasiPolynomial(T, padded, m0, deg)
    raise GrowthError("no quasi-polynomial matches the holdout values")


# --- classification ---------------------------------------------------------

@dataclass(frozen=True)
class GrowthReport:
    classification: str                     # "finite" | "polynomial" | "exponential"
    degree: int | None                      # D for polynomial growth
    entropy: EntropyValue | None            # None for finite-dimensional algebras
    gk_dim: float                           # int, or math.inf
    quasi: QuasiPolynomial | None = None
    gk_bounds: tuple[Fraction, Fraction] | None = None
    dims: tuple[int, ...] = field(default=(), repr=False)

    @property
    def entropy_value(self) -> float:
        if self.classification == "finite":
            return -math.inf
        if self.classification == "polynomial":
            return 0.0
        return self.entropy.value

    def to_dict(self) -> dict:
        return {
            "classification": self.classification,
            "degree": self.degree,
            "gk_dim": "inf" if self.gk_dim == math.inf else self.gk_dim,
            "entropy": self.entropy.to_dict() if self.entropy else {"value": "-inf"},
            "quasi": self.quasi.to_dict() if self.quasi else None,
            "gk_bounds": [str(c) for c in self.gk_bounds] if self.gk_bounds else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def classify_growth(g, counts=None, horizon: int = 200, fit_quasi: bool = True) -> GrowthReport:
    """Classify growth structurally (shared circuits) and spectrally
    (Perron root > 1); the two must agree."""
    g = _as_graph(g)
    if counts is None:
        counts = count_normal_words(g, horizon)
    dims = tuple(v.total for v in counts)
    depth = circuit_chain_depth(g)
    factors = scc_factors(g)
    spectral_exp = any(polys.has_root_above(f, 1) for _, _, f in factors)
    structural_exp = depth == EXPONENTIAL
    if spectral_exp != structural_exp:
        raise InconsistentGrowth(
            f"shared-circuit test says {structural_exp}, Perron test says {spectral_exp}")
    if not factors:
        return GrowthReport("finite", None, None, 0, dims=dims)
    entropy = growth_entropy(g)
    if structural_exp:
        return GrowthReport("exponential", None, entropy, math.inf, dims=dims)
    D = depth - 1
    quasi = bounds = None
    if fit_quasi:
        quasi = quasi_polynomial_fit(list(dims), g, D)
        ratios = [Fraction(dims[m], m ** D) for m in range(max(quasi.onset, 1), len(dims))]
        bounds = (min(ratios), max(ratios))
    return GrowthReport("polynomial", D, entropy, depth, quasi, bounds, dims)
