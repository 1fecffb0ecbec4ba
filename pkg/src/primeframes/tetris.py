"""Sparse real unit-norm tight frames built row by row ("spectral tetris").

Each row j of the n x m output must carry total squared weight
lambda = m/n.  The construction spends that budget on fully supported
columns e_j (count ``ones_per_row[j]``) and, when a fractional remainder
r_j is left over, on one 2 x 2 block

    [ a  a ]         a = sqrt(r_j / 2),
    [ b -b ]         b = sqrt(1 - r_j / 2),

shared with row j+1, which starts the next row with 2 - r_j already
spent.  The remainders r_j = frac(j m / n) vanish exactly on the rows in
``reset_rows``, where the budget starts fresh.  All bookkeeping is exact
rational arithmetic; floats appear only in the assembled matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .divisibility import SEARCH_CAP, is_prime_bruteforce
from .errors import FrameError, InfeasibleError
from .frames import FrameMatrix


@dataclass(frozen=True)
class TetrisSchedule:
    """Exact column plan of a spectral tetris frame.

    ``ones_per_row[j-1]`` counts the e_j columns, ``remainders[j-1]`` is
    the rational leftover r_j in [0, 1) after row j, and ``reset_rows``
    lists the j (0 through n) with j * m/n integral, where no block
    straddles into row j+1.
    """

    n: int
    m: int
    lam: Fraction
    reset_rows: tuple
    ones_per_row: tuple
    remainders: tuple

    def block_rows(self) -> tuple:
        """Rows j (1-based) followed by a 2 x 2 block into row j + 1."""
        return tuple(j for j in range(1, self.n)
                     if self.remainders[j - 1] != 0)

    def to_json_obj(self) -> dict:
        return {
            "lambda": [self.lam.numerator, self.lam.denominator],
            "m_seq": list(self.ones_per_row),
            "r_seq_numerators": [
                r.numerator * (self.n // r.denominator) for r in self.remainders
            ],
            "K": list(self.reset_rows),
        }


class StfFactorization(NamedTuple):
    prime_core: FrameMatrix
    basis_copies: int
    core_indices: tuple
    basis_indices: tuple


def _schedule_seqs(n: int, m: int):
    """The (ones, remainders, reset_rows) sequences, exact.

    Raises InfeasibleError when a row budget goes negative, which can
    happen only for m < 2n.
    """
    lam = Fraction(m, n)
    g = math.gcd(n, m)
    reset = tuple(t * (n // g) for t in range(g + 1))
    reset_set = set(reset)
    ones = []
    remainders = []
    r_prev = Fraction(0)
    for j in range(1, n + 1):
        budget = lam if (j - 1) in reset_set else lam - 2 + r_prev
        if budget < 0:
            raise InfeasibleError(
                "row %d of a %d x %d tetris frame has negative budget; "
                "no such frame exists" % (j, n, m))
        count = int(budget)
        ones.append(count)
        r_prev = budget - count
        remainders.append(r_prev)
    return lam, reset, tuple(ones), tuple(remainders)


def stf_schedule(n: int, m: int) -> TetrisSchedule:
    """Schedule for the standard (redundancy >= 2) construction."""
    if n < 1 or m < 2 * n:
        raise ValueError("need n >= 1 and m >= 2n")
    lam, reset, ones, remainders = _schedule_seqs(n, m)
    blocks = sum(1 for j in range(1, n) if remainders[j - 1] != 0)
    if sum(ones) + 2 * blocks != m:
        raise FrameError("schedule bookkeeping does not add up to m")
    return TetrisSchedule(n, m, lam, reset, ones, remainders)


def _assemble(n: int, m: int, ones, remainders):
    """Build the matrix; also return the 1-based e_j column positions per row."""
    out = np.zeros((n, m))
    ones_pos = [[] for _ in range(n)]
    col = 0
    for j in range(n):
        for _ in range(ones[j]):
            out[j, col] = 1.0
            ones_pos[j].append(col + 1)
            col += 1
        r = remainders[j]
        if j < n - 1 and r != 0:
            a = math.sqrt(r / 2)
            b = math.sqrt(1 - r / 2)
            out[j, col] = a
            out[j, col + 1] = a
            out[j + 1, col] = b
            out[j + 1, col + 1] = -b
            col += 2
    if col != m:
        raise FrameError("assembled %d columns, expected %d" % (col, m))
    return out, [tuple(p) for p in ones_pos]


def stf(n: int, m: int) -> FrameMatrix:
    """The sparse unit-norm tight frame with bound m/n, for m >= 2n."""
    sched = stf_schedule(n, m)
    out, _ = _assemble(n, m, sched.ones_per_row, sched.remainders)
    return FrameMatrix(out.astype(np.complex128), "real")


def _divisibility_condition(n: int, m: int) -> bool:
    """Exact job-scheduling condition: j m/n - floor((j-1) m/n) >= 3 for
    1 < j < n / gcd(n, m); vacuously true when that range is empty."""
    g = math.gcd(n, m)
    for j in range(2, n // g):
        if Fraction(j * m, n) - ((j - 1) * m) // n < 3:
            return False
    return True


def stf_is_divisible(n: int, m: int) -> bool:
    """Whether the tetris frame on (n, m), m >= 2n, has a tight proper subset.

    Equivalent to every row keeping at least one fully supported column,
    i.e. min ones_per_row >= 1.
    """
    if n < 1 or m < 2 * n:
        raise ValueError("need n >= 1 and m >= 2n")
    return _divisibility_condition(n, m)


def stf_low_redundancy_feasible(n: int, m_tilde: int) -> bool:
    """Whether the row-by-row construction extends to n < m < 2n.

    Exactly when the (n, m_tilde + n) frame is divisible: peeling one
    orthonormal basis out of it leaves the low-redundancy frame.
    """
    if not n < m_tilde < 2 * n:
        raise ValueError("need n < m_tilde < 2n")
    return _divisibility_condition(n, m_tilde + n)


def stf_low_redundancy(n: int, m_tilde: int) -> FrameMatrix:
    """The sparse unit-norm tight frame with n < m_tilde < 2n vectors.

    Raises InfeasibleError when no such tetris frame exists (some row
    budget would go negative).
    """
    if not n < m_tilde < 2 * n:
        raise ValueError("need n < m_tilde < 2n")
    lam, _, ones, remainders = _schedule_seqs(n, m_tilde)
    del lam
    out, _ = _assemble(n, m_tilde, ones, remainders)
    return FrameMatrix(out.astype(np.complex128), "real")


def stf_factorize(n: int, m: int) -> StfFactorization:
    """Peel orthonormal bases off a tetris frame until the rest is prime.

    Each basis copy takes, per row, the lowest-indexed remaining fully
    supported column.  Returns the prime core as a frame (column order
    preserved), the number of copies peeled, and the 1-based index sets:
    ``core_indices`` ascending, ``basis_indices`` one tuple per copy.
    The core equals the tetris frame on (n, m - copies * n) up to column
    order.
    """
    sched = stf_schedule(n, m)
    matrix, ones_pos = _assemble(n, m, sched.ones_per_row, sched.remainders)
    min_ones = min(sched.ones_per_row)
    copies = 0
    while m - copies * n >= 2 * n and min_ones - copies >= 1:
        copies += 1
    basis_indices = tuple(
        tuple(ones_pos[j][l] for j in range(n)) for l in range(copies))
    peeled = set()
    for idx in basis_indices:
        peeled.update(idx)
    core_indices = tuple(i for i in range(1, m + 1) if i not in peeled)
    core = FrameMatrix(matrix[:, [i - 1 for i in core_indices]], "real")
    _verify_core_prime(n, core)
    return StfFactorization(core, copies, core_indices, basis_indices)


def _verify_core_prime(n: int, core: FrameMatrix):
    if core.m <= SEARCH_CAP:
        ok = is_prime_bruteforce(core)
    else:
        ok = core.m < 2 * n or not stf_is_divisible(n, core.m)
    if not ok:
        raise FrameError("factorization left a non-prime core; this is a bug")
