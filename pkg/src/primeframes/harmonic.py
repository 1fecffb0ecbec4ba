"""Harmonic tight frames and their exact divisibility arithmetic.

The harmonic frame on parameters (n, m, s) consists of the m columns

    phi_k = sqrt(s/n) * (1, w^k, w^{2k}, ..., w^{(n-1)k}),   w = exp(2 pi i / m),

for k = 0..m-1.  It is a tight frame for C^n with bound s m / n and
column norms sqrt(s).  Its tight subsets are unions of arithmetic index
cosets, so primality, divisor sizes, and explicit divisors all reduce to
integer arithmetic on the divisors of m.  Everything in this module that
decides divisibility is exact; no floating-point tolerance is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import PackingError
from .frames import FrameMatrix
from .numtheory import prime_power_factorization, reachable_sums


@dataclass(frozen=True)
class HtfParams:
    """Parameters (n, m, s) of a harmonic frame; s scales squared norms."""

    n: int
    m: int
    s: float = 1.0

    def __post_init__(self):
        if not 1 <= self.n <= self.m:
            raise ValueError("need 1 <= n <= m")
        if not self.s > 0:
            raise ValueError("s must be positive")


@dataclass(frozen=True)
class DivisorSets:
    """The three integer divisor sets of a harmonic frame shape (n, m).

    ``divisors``: divisors d of m with n <= d <= m - n (sizes of coset
    divisors).  ``minimal_divisors``: elements of ``divisors`` with no
    proper divisor in the set.  ``divisible_sizes``: every size s in
    [n, m - n] such that both s and m - s are sums of minimal divisors;
    these are exactly the cardinalities of tight subsets.
    """

    n: int
    m: int
    divisors: tuple
    minimal_divisors: tuple
    divisible_sizes: tuple
    prime_factors_of_m: tuple

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "D": list(self.divisors),
            "P": list(self.minimal_divisors),
            "S": list(self.divisible_sizes),
            "prime_factorization": [list(pe) for pe in self.prime_factors_of_m],
        }


def _root_powers(m: int, exponents) -> np.ndarray:
    """exp(2 pi i e / m) with the exponents reduced mod m first.

    The reduction keeps every angle in [0, 2 pi), which preserves full
    precision for large exponent products.
    """
    e = np.asarray(exponents) % m
    return np.exp((2j * np.pi / m) * e)


def htf(params: HtfParams) -> FrameMatrix:
    """The harmonic frame matrix for the given parameters."""
    n, m, s = params.n, params.m, params.s
    powers = np.outer(np.arange(n), np.arange(m))
    entries = math.sqrt(s / n) * _root_powers(m, powers)
    return FrameMatrix(entries, "complex")


def index_coset(m: int, d: int, q: int) -> tuple:
    """The 1-based index coset {k m/d + q : k = 0..d-1} of size d.

    Requires d | m and 1 <= q <= m/d.  Harmonic frame columns on such a
    coset form a tight subset with bound s d / n.
    """
    if d < 1 or m % d != 0:
        raise ValueError("d must be a positive divisor of m")
    step = m // d
    if not 1 <= q <= step:
        raise ValueError("q must lie in [1, m/d]")
    return tuple(k * step + q for k in range(d))


def divisor_sets(n: int, m: int) -> DivisorSets:
    """Compute the divisor, minimal-divisor, and divisible-size sets."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    divisors = tuple(d for d in range(n, m - n + 1) if m % d == 0)
    minimal = tuple(d for d in divisors
                    if not any(d % c == 0 for c in divisors if c < d))
    reach = reachable_sums(m, minimal)
    sizes = tuple(s for s in range(n, m - n + 1) if reach[s] and reach[m - s])
    return DivisorSets(n, m, divisors, minimal, sizes,
                       tuple(prime_power_factorization(m)))


def is_balancing(m: int, k: int) -> bool:
    """Whether k and m - k are both sums of prime divisors of m.

    Repetition is allowed and the empty sum gives zero.  These are
    exactly the k for which some k-subset of the m-th roots of unity
    sums to zero along with its complement.
    """
    if m < 1 or not 0 <= k <= m:
        raise ValueError("need m >= 1 and 0 <= k <= m")
    primes = [p for p, _ in prime_power_factorization(m)] if m > 1 else []
    reach = reachable_sums(m, primes)
    return bool(reach[k] and reach[m - k])


def htf_is_prime(n: int, m: int) -> bool:
    """Closed-form primality of the harmonic frame shape (n, m).

    For n >= 2 the frame is prime exactly when m has no divisor in
    [n, m - n].  For n = 1 every single vector is a tight subset, so the
    frame is divisible whenever m >= 2.
    """
    if not 1 <= n <= m:
        raise ValueError("need 1 <= n <= m")
    if n == 1:
        return m < 2
    return len(divisor_sets(n, m).divisors) == 0


def htf_prime_factors(params: HtfParams, p: int) -> list:
    """The m/p prime tight factors of a harmonic frame along cosets of size p.

    Requires p in the minimal divisor set.  Factor q (1-based) carries
    the columns indexed by index_coset(m, p, q) and equals
    diag(w^t)^{q-1} applied to the harmonic frame on (n, p, s), with
    w = exp(2 pi i / m).
    """
    n, m, s = params.n, params.m, params.s
    sets = divisor_sets(n, m)
    if p not in sets.minimal_divisors:
        raise ValueError("p = %d is not a minimal divisor size of (%d, %d)"
                         % (p, n, m))
    kernel = htf(HtfParams(n, p, s)).entries
    t = np.arange(n)
    out = []
    for q in range(1, m // p + 1):
        phase = _root_powers(m, t * (q - 1))
        out.append(FrameMatrix(phase[:, None] * kernel, "complex"))
    return out


def _representations(total: int, parts) -> list:
    """All multisets of parts summing to total, fewest terms first.

    Between multisets of equal length the one with larger parts comes
    first.  Each multiset is a descending tuple.
    """
    parts = sorted(set(parts), reverse=True)
    out = []

    def rec(remaining, start, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(parts)):
            if parts[i] <= remaining:
                acc.append(parts[i])
                rec(remaining - parts[i], i, acc)
                acc.pop()

    rec(total, 0, [])
    out.sort(key=lambda t: (len(t), tuple(-x for x in t)))
    return out


def htf_divisor_of_size(params: HtfParams, size: int) -> tuple:
    """A tight subset of the given cardinality, as sorted 1-based indices.

    The subset is assembled as a disjoint union of index cosets whose
    sizes are minimal divisors summing to ``size``.  Representations are
    tried with fewest cosets first (larger cosets breaking ties) and the
    shifts are packed by depth-first search, smallest shift first, so
    the result is deterministic.  Raises PackingError when no disjoint
    packing exists for any representation (ValueError when ``size`` is
    not a divisible size at all).
    """
    n, m = params.n, params.m
    sets = divisor_sets(n, m)
    if size not in sets.divisible_sizes:
        raise ValueError("size %d is not a divisible size for (%d, %d)"
                         % (size, n, m))
    for parts in _representations(size, sets.minimal_divisors):
        packed = _pack_cosets(m, parts)
        if packed is not None:
            return tuple(sorted(packed))
    raise PackingError(
        "no disjoint coset packing of size %d for (n, m) = (%d, %d)"
        % (size, n, m))


def _pack_cosets(m: int, parts) -> set | None:
    """Disjoint cosets of the given sizes, or None.

    Depth-first over shifts in increasing order; equal-size cosets are
    forced into increasing shift order to skip symmetric retries.
    """
    used = set()
    shifts = []

    def place(i):
        if i == len(parts):
            return True
        d = parts[i]
        step = m // d
        first = shifts[-1] + 1 if i > 0 and parts[i - 1] == d else 1
        for q in range(first, step + 1):
            coset = range(q, m + 1, step)
            if any(c in used for c in coset):
                continue
            used.update(coset)
            shifts.append(q)
            if place(i + 1):
                return True
            shifts.pop()
            used.difference_update(coset)
        return False

    return used if place(0) else None


def htf_coherence(n: int, m: int) -> float:
    """Coherence of the unit-norm harmonic frame on (n, m), in closed form.

    Equals (1/n) sin(pi n / m) / sin(pi / m), attained by adjacent
    columns; zero when m = n (an orthonormal basis up to phase).
    """
    if not 1 <= n <= m or m < 2:
        raise ValueError("need m >= n >= 1 and m >= 2")
    if m == n:
        return 0.0
    return math.sin(math.pi * n / m) / (n * math.sin(math.pi / m))


def vanishing_subsum_check(m: int, subset, power: int) -> bool:
    """Whether sum of exp(2 pi i power (j-1) / m) over j in subset vanishes.

    A subset of harmonic frame indices is tight exactly when this holds
    for every power 1..n-1.  Uses a fixed absolute tolerance of 1e-10.
    """
    if m < 1 or power < 1:
        raise ValueError("need m >= 1 and power >= 1")
    idx = sorted(int(j) for j in subset)
    if not idx or idx[0] < 1 or idx[-1] > m:
        raise ValueError("subset must be nonempty with indices in 1..m")
    total = _root_powers(m, [power * (j - 1) for j in idx]).sum()
    return bool(abs(total) <= 1e-10)
