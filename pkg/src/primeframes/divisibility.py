"""Divisibility and primality decisions for tight frames by subset search.

A tight frame Phi with bound A is divisible when some proper subset J of
its columns is itself tight with bound strictly between 0 and A; the
complement is then automatically tight with the remaining bound.  A
tight frame with no such subset is prime.  The search below enumerates
candidate subsets in a fixed order, so every answer is deterministic:
sizes ascending, and within one size the subsets containing column 1 by
ascending bitmask value over the remaining columns.

Brute-force enumeration is exponential in m, so searches refuse frames
with more than SEARCH_CAP vectors unless forced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import NotTightError, SearchCapError
from .frames import DEFAULT_TOL, FrameMatrix, _bound_and_residual, check_tight

SEARCH_CAP = 26


@dataclass(frozen=True)
class DivisorCertificate:
    """A tight proper subset together with its bound split.

    ``subset`` holds sorted 1-based column indices, ``bound`` is the tight
    bound of the subset, and ``complement_bound`` the bound of the rest;
    the two sum to the bound of the parent frame.
    """

    subset: tuple
    size: int
    bound: float
    complement_bound: float

    def to_json_obj(self) -> dict:
        return {
            "subset": list(self.subset),
            "size": self.size,
            "bound": self.bound,
            "complement_bound": self.complement_bound,
        }


@dataclass(frozen=True)
class PrimeFactorization:
    """A partition of the columns into prime tight sub-frames."""

    factors: tuple
    bounds: tuple

    def to_json_obj(self) -> dict:
        return {
            "factors": [list(f) for f in self.factors],
            "bounds": list(self.bounds),
        }


def _masks(width: int, bits: int):
    """All masks of the given popcount below 2**width, ascending (Gosper)."""
    if bits == 0:
        yield 0
        return
    if bits > width:
        return
    mask = (1 << bits) - 1
    limit = 1 << width
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) // low) >> 2)


def _mask_to_indices(mask: int) -> list:
    """Bit positions of a mask as 0-based column indices 1, 2, ... (column
    0 is implied separately by the pinned-first-column search)."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def _subset_stats(entries: np.ndarray, idx0) -> tuple[float, float]:
    return _bound_and_residual(entries[:, idx0])


def _require_tight(phi: FrameMatrix, tol: float) -> float:
    report = check_tight(phi, tol)
    if not report.is_tight:
        raise NotTightError(
            "input is not a tight frame (residual %.3e, tol %.1e)"
            % (report.residual, tol))
    return report.bound


def _check_cap(m: int, force: bool):
    if m > SEARCH_CAP and not force:
        raise SearchCapError(
            "m = %d exceeds the subset search cap %d; pass force=True to "
            "search anyway" % (m, SEARCH_CAP))


def find_divisor(phi: FrameMatrix, size_filter: int | None = None,
                 tol: float = DEFAULT_TOL, force: bool = False):
    """First tight proper subset splitting the bound, or None if prime.

    Only subsets containing column 1 are visited: the complement of a
    divisor is a divisor, so one of the pair always contains column 1.
    With ``size_filter`` the search is restricted to that size and its
    complement size.  Returns a DivisorCertificate or None.
    """
    bound = _require_tight(phi, tol)
    _check_cap(phi.m, force)
    n, m = phi.n, phi.m
    if size_filter is not None:
        if not n <= size_filter <= m - n:
            raise ValueError("size_filter must lie in [n, m - n]")
        sizes = sorted({size_filter, m - size_filter})
    else:
        sizes = range(n, m - n + 1)
    entries = phi.entries
    for size in sizes:
        for mask in _masks(m - 1, size - 1):
            idx0 = [0] + _mask_to_indices(mask)
            sub_bound, residual = _subset_stats(entries, idx0)
            if residual <= tol and tol < sub_bound < bound - tol:
                subset = tuple(i + 1 for i in idx0)
                return complement_certificate(phi, subset, tol)
    return None


def is_prime_bruteforce(phi: FrameMatrix, tol: float = DEFAULT_TOL,
                        force: bool = False) -> bool:
    """Exhaustive primality decision for a tight frame.

    With fewer than 2n vectors no proper subset can be tight with a tight
    complement (the smaller part could not span), so the search is skipped.
    """
    bound = _require_tight(phi, tol)
    del bound
    if phi.m < 2 * phi.n:
        return True
    return find_divisor(phi, None, tol, force) is None


def complement_certificate(phi: FrameMatrix, subset,
                           tol: float = DEFAULT_TOL) -> DivisorCertificate:
    """Certificate for a known divisor subset, re-verifying both halves."""
    bound = _require_tight(phi, tol)
    subset = tuple(sorted(int(i) for i in subset))
    if len(set(subset)) != len(subset):
        raise ValueError("subset has repeated indices")
    if subset and (subset[0] < 1 or subset[-1] > phi.m):
        raise ValueError("subset indices out of range")
    if not 0 < len(subset) < phi.m:
        raise ValueError("subset must be proper and nonempty")
    idx0 = [i - 1 for i in subset]
    sub_bound, residual = _subset_stats(phi.entries, idx0)
    if residual > tol or not tol < sub_bound < bound - tol:
        raise NotTightError("subset is not a divisor of the frame")
    rest = [i for i in range(phi.m) if i + 1 not in set(subset)]
    rest_bound, rest_residual = _subset_stats(phi.entries, rest)
    if rest_residual > tol:
        raise NotTightError("complement failed its tightness check")
    del rest_bound
    return DivisorCertificate(subset, len(subset), sub_bound, bound - sub_bound)


def prime_factorization(phi: FrameMatrix, tol: float = DEFAULT_TOL,
                        force: bool = False) -> PrimeFactorization:
    """Greedy partition of a tight frame into prime tight sub-frames.

    Splits off the first divisor found and recurses on both halves, so
    the result is deterministic.  Columns that are exactly zero never
    affect tightness; they are set aside and attached to the final
    factor.  The factor count never exceeds floor(m / n).
    """
    bound = _require_tight(phi, tol)
    del bound
    _check_cap(phi.m, force)
    zero = [i for i in range(1, phi.m + 1)
            if not np.any(phi.entries[:, i - 1])]
    nonzero = [i for i in range(1, phi.m + 1) if i not in set(zero)]
    factors = []
    bounds = []

    def split(indices):
        sub = phi.submatrix(indices)
        cert = None if sub.m < 2 * sub.n else find_divisor(sub, None, tol, True)
        if cert is None:
            factors.append(tuple(indices))
            bounds.append(_subset_stats(phi.entries, [i - 1 for i in indices])[0])
            return
        part = [indices[j - 1] for j in cert.subset]
        rest = [i for i in indices if i not in set(part)]
        split(part)
        split(rest)

    split(nonzero)
    if zero:
        merged = tuple(sorted(factors[-1] + tuple(zero)))
        factors[-1] = merged
    return PrimeFactorization(tuple(factors), tuple(bounds))


def prime_factor_size_multisets(phi: FrameMatrix, tol: float = DEFAULT_TOL,
                                force: bool = False) -> list:
    """All factor-size multisets over every prime factorization.

    Exhaustive (doubly exponential in spirit, memoized on column subsets),
    intended for small frames.  Zero columns are ignored.  Returns sorted
    tuples, e.g. [(2, 2, 2, 2, 2), (5, 5)].
    """
    _require_tight(phi, tol)
    _check_cap(phi.m, force)
    n = phi.n
    entries = phi.entries
    nonzero = tuple(i for i in range(1, phi.m + 1)
                    if np.any(entries[:, i - 1]))
    memo = {}

    def qualifies(idx0, parent_bound):
        sub_bound, residual = _subset_stats(entries, idx0)
        return (residual <= tol and tol < sub_bound < parent_bound - tol,
                sub_bound)

    def solve(rem: frozenset) -> set:
        if rem in memo:
            return memo[rem]
        indices = sorted(rem)
        parent_bound, _ = _subset_stats(entries, [i - 1 for i in indices])
        first, pool = indices[0], indices[1:]
        out = set()
        divisible = False
        for size in range(n, len(indices) - n + 1):
            for tail in combinations(pool, size - 1):
                part = (first,) + tail
                ok, _ = qualifies([i - 1 for i in part], parent_bound)
                if not ok:
                    continue
                divisible = True
                if not is_prime_bruteforce(phi.submatrix(part), tol, True):
                    continue
                for sizes in solve(rem - set(part)):
                    out.add(tuple(sorted(sizes + (size,))))
        if not divisible:
            out = {(len(indices),)}
        memo[rem] = out
        return out

    return sorted(solve(frozenset(nonzero)))


def tight_subsets(phi: FrameMatrix, size: int, tol: float = DEFAULT_TOL,
                  force: bool = False) -> list:
    """All subsets of the given size that are tight with positive bound."""
    if not 1 <= size <= phi.m:
        raise ValueError("size out of range")
    _check_cap(phi.m, force)
    entries = phi.entries
    out = []
    for subset in combinations(range(phi.m), size):
        bound, residual = _subset_stats(entries, list(subset))
        if residual <= tol and bound > tol:
            out.append(tuple(i + 1 for i in subset))
    return out


def robustness_counterexample_check(phi: FrameMatrix, p: int,
                                    tol: float = DEFAULT_TOL,
                                    force: bool = False) -> bool:
    """True when some p-subset of a tight frame fails to be tight.

    For n >= 2 no tight frame has every p-subset tight for p in
    [n, m - n]; this verifies that non-robustness witness exists.
    """
    _require_tight(phi, tol)
    if phi.n < 2:
        raise ValueError("needs dimension n >= 2")
    if not phi.n <= p <= phi.m - phi.n:
        raise ValueError("p must lie in [n, m - n]")
    return len(tight_subsets(phi, p, tol, force)) < comb(phi.m, p)
