"""Fast analysis and synthesis for harmonic frames via coset factors.

The m columns of the unit-norm harmonic frame on (n, m) split along the
index cosets I(p, q), q = 1..m/p, for any minimal divisor size p.  The
columns on coset q are diag(w^t)^{q-1} times the kernel frame on (n, p),
with w = exp(2 pi i / m), so analysis against all m vectors costs m/p
phase twists plus m/p size-p transforms instead of one size-m transform
of the zero-padded signal.  Coefficients use the convention
c_i = <x, phi_i> = (Phi* x)_i and are returned in frame index order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .harmonic import HtfParams, _root_powers, divisor_sets, htf, index_coset


@dataclass(frozen=True, eq=False)
class HtfTransformPlan:
    """Precomputed data for repeated transforms at one (n, m, p).

    ``phase_diag`` is the diagonal of the coset-twist unitary,
    ``kernel`` the (n, p) harmonic frame applied on each coset,
    ``coset_maps`` the 1-based index cosets in shift order, and
    ``phase_powers`` row q-1 holds the conjugated diagonal raised to
    the power q - 1.
    """

    n: int
    m: int
    factor_size: int
    coset_count: int
    phase_diag: np.ndarray
    kernel: np.ndarray
    coset_maps: tuple
    phase_powers: np.ndarray


def plan(n: int, m: int, p: int) -> HtfTransformPlan:
    """Build a transform plan; p must be a minimal divisor size of (n, m)."""
    sets = divisor_sets(n, m)
    if p not in sets.minimal_divisors:
        raise ValueError(
            "p = %d is not a minimal divisor size of (n, m) = (%d, %d)"
            % (p, n, m))
    count = m // p
    t = np.arange(n)
    phase_diag = _root_powers(m, t)
    kernel = htf(HtfParams(n, p, 1.0)).entries
    maps = tuple(index_coset(m, p, q) for q in range(1, count + 1))
    powers = _root_powers(m, -np.outer(np.arange(count), t))
    return HtfTransformPlan(n, m, p, count, phase_diag, kernel, maps, powers)


def analyze_fast(tplan: HtfTransformPlan, x) -> np.ndarray:
    """All m coefficients <x, phi_i> via per-coset size-p transforms."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (tplan.n,):
        raise ValueError("signal length must equal n = %d" % tplan.n)
    twisted = tplan.phase_powers * x[None, :]
    per_coset = np.fft.fft(twisted, n=tplan.factor_size, axis=1)
    per_coset /= math.sqrt(tplan.n)
    return per_coset.T.reshape(tplan.m).copy()


def analyze_naive(n: int, m: int, x) -> np.ndarray:
    """Reference path: one size-m transform of the zero-padded signal."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape != (n,):
        raise ValueError("signal length must equal n = %d" % n)
    return np.fft.fft(x, n=m) / math.sqrt(n)


def synthesize_fast(tplan: HtfTransformPlan, coeffs) -> np.ndarray:
    """Invert analyze_fast: x = (1/A) Phi c with A = m/n, per coset."""
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.shape != (tplan.m,):
        raise ValueError("coefficient length must equal m = %d" % tplan.m)
    p = tplan.factor_size
    per_coset = c.reshape(p, tplan.coset_count).T
    z = np.fft.ifft(per_coset, axis=1) * (p / math.sqrt(tplan.n))
    contributions = np.conj(tplan.phase_powers) * z[:, : tplan.n]
    return contributions.sum(axis=0) * (tplan.n / tplan.m)


def benchmark(n: int, m: int, p: int, trials: int, seed: int) -> dict:
    """Median wall time of the coset path versus the size-m reference path.

    Times analyze over ``trials`` seeded random complex signals, one
    timed call per trial after a warm-up, and reports medians in
    nanoseconds with rough operation-count estimates.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    tplan = plan(n, m, p)
    rng = np.random.default_rng(seed)
    signals = rng.standard_normal((trials, n)) + 1j * rng.standard_normal((trials, n))
    analyze_fast(tplan, signals[0])
    analyze_naive(n, m, signals[0])
    fast_ns = []
    naive_ns = []
    for x in signals:
        t0 = time.perf_counter_ns()
        analyze_fast(tplan, x)
        fast_ns.append(time.perf_counter_ns() - t0)
        t0 = time.perf_counter_ns()
        analyze_naive(n, m, x)
        naive_ns.append(time.perf_counter_ns() - t0)
    return {
        "n": n,
        "m": m,
        "p": p,
        "trials": trials,
        "fast_median_ns": int(np.median(fast_ns)),
        "naive_median_ns": int(np.median(naive_ns)),
        "fast_op_estimate": int(m * max(math.log2(p), 1.0)),
        "naive_op_estimate": int(m * max(math.log2(m), 1.0)),
    }
