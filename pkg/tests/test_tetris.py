import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import columns_as_multiset
from primeframes import (InfeasibleError, check_tight, is_prime_bruteforce,
                         stf, stf_factorize, stf_is_divisible,
                         stf_low_redundancy, stf_low_redundancy_feasible,
                         stf_schedule)

# The 4 x 11 instance, assembled by hand from the row-budget recurrence.
STF_4_11 = np.array([
    [1, 1, math.sqrt(3 / 8), math.sqrt(3 / 8), 0, 0, 0, 0, 0, 0, 0],
    [0, 0, math.sqrt(5 / 8), -math.sqrt(5 / 8), 1, math.sqrt(1 / 4),
     math.sqrt(1 / 4), 0, 0, 0, 0],
    [0, 0, 0, 0, 0, math.sqrt(3 / 4), -math.sqrt(3 / 4), 1,
     math.sqrt(1 / 8), math.sqrt(1 / 8), 0],
    [0, 0, 0, 0, 0, 0, 0, 0, math.sqrt(7 / 8), -math.sqrt(7 / 8), 1],
])


def closed_form_low_redundancy(n, m_tilde):
    d = 2 * n - m_tilde
    return m_tilde >= 2 * n - 1 or (n % d == 0 and m_tilde % d == 0)


def test_schedule_4_11():
    sched = stf_schedule(4, 11)
    assert sched.lam == Fraction(11, 4)
    assert sched.reset_rows == (0, 4)
    assert sched.ones_per_row == (2, 1, 1, 1)
    assert sched.remainders == (Fraction(3, 4), Fraction(1, 2),
                                Fraction(1, 4), Fraction(0))
    assert sched.block_rows() == (1, 2, 3)
    obj = sched.to_json_obj()
    assert obj == {"lambda": [11, 4], "m_seq": [2, 1, 1, 1],
                   "r_seq_numerators": [3, 2, 1, 0], "K": [0, 4]}


def test_schedule_integer_redundancy():
    sched = stf_schedule(4, 12)
    assert sched.reset_rows == (0, 1, 2, 3, 4)
    assert sched.ones_per_row == (3, 3, 3, 3)
    assert sched.block_rows() == ()
    assert np.array_equal(stf(4, 12).entries.real,
                          np.kron(np.eye(4), np.ones(3)))


def test_stf_4_11_matrix():
    phi = stf(4, 11)
    assert phi.field == "real"
    assert np.max(np.abs(phi.entries - STF_4_11)) < 1e-15


def test_stf_is_unit_norm_tight_and_sparse():
    for n in range(1, 6):
        for m in range(2 * n, 2 * n + 7):
            phi = stf(n, m)
            assert np.max(np.abs(phi.column_norms() - 1.0)) < 1e-12
            rep = check_tight(phi, 1e-12)
            assert rep.is_tight and abs(rep.bound - m / n) < 1e-12
            support = np.count_nonzero(np.abs(phi.entries) > 0, axis=0)
            assert support.max() <= 2


def test_stf_validation():
    with pytest.raises(ValueError):
        stf(3, 5)
    with pytest.raises(ValueError):
        stf(0, 4)
    with pytest.raises(ValueError):
        stf_schedule(2, 3)


def test_stf_is_divisible_known_values():
    assert stf_is_divisible(4, 11)
    assert stf_is_divisible(2, 5)
    assert stf_is_divisible(2, 4)
    assert not stf_is_divisible(3, 7)
    assert not stf_is_divisible(4, 9)
    assert not stf_is_divisible(5, 12)
    with pytest.raises(ValueError):
        stf_is_divisible(3, 5)


def test_divisibility_equals_every_row_keeping_a_one():
    for n in range(1, 7):
        for m in range(2 * n, 3 * n + 8):
            sched = stf_schedule(n, m)
            assert stf_is_divisible(n, m) == (min(sched.ones_per_row) >= 1)


def test_divisibility_matches_bruteforce():
    for n in range(2, 5):
        for m in range(2 * n, 15):
            divisible = not is_prime_bruteforce(stf(n, m))
            assert stf_is_divisible(n, m) == divisible, (n, m)


def test_low_redundancy_feasible_known_values():
    assert stf_low_redundancy_feasible(2, 3)
    assert stf_low_redundancy_feasible(4, 6)
    assert stf_low_redundancy_feasible(4, 7)
    assert stf_low_redundancy_feasible(6, 9)
    assert stf_low_redundancy_feasible(6, 10)
    assert not stf_low_redundancy_feasible(3, 4)
    assert not stf_low_redundancy_feasible(5, 6)
    assert not stf_low_redundancy_feasible(6, 8)
    with pytest.raises(ValueError):
        stf_low_redundancy_feasible(4, 4)
    with pytest.raises(ValueError):
        stf_low_redundancy_feasible(4, 8)


def test_low_redundancy_matches_closed_form():
    for n in range(2, 17):
        for m_tilde in range(n + 1, 2 * n):
            assert (stf_low_redundancy_feasible(n, m_tilde)
                    == closed_form_low_redundancy(n, m_tilde)), (n, m_tilde)


def test_low_redundancy_construction():
    for n, m_tilde in ((2, 3), (4, 7), (6, 9), (6, 10), (5, 9)):
        phi = stf_low_redundancy(n, m_tilde)
        assert phi.m == m_tilde
        assert np.max(np.abs(phi.column_norms() - 1.0)) < 1e-12
        rep = check_tight(phi, 1e-12)
        assert rep.is_tight and abs(rep.bound - m_tilde / n) < 1e-12
        assert is_prime_bruteforce(phi)


def test_low_redundancy_infeasible_raises():
    with pytest.raises(InfeasibleError):
        stf_low_redundancy(3, 4)
    with pytest.raises(InfeasibleError) as err:
        stf_low_redundancy(5, 6)
    assert "negative budget" in str(err.value)


def test_factorize_4_11():
    fact = stf_factorize(4, 11)
    assert fact.basis_copies == 1
    assert fact.basis_indices == ((1, 5, 8, 11),)
    assert fact.core_indices == (2, 3, 4, 6, 7, 9, 10)
    reduced = stf_low_redundancy(4, 7)
    assert np.max(np.abs(fact.prime_core.entries - reduced.entries)) < 1e-12


def test_factorize_peels_all_spare_bases():
    fact = stf_factorize(2, 8)
    assert fact.basis_copies == 3
    assert fact.prime_core.m == 2
    fact = stf_factorize(2, 4)
    assert fact.basis_copies == 1
    assert fact.prime_core.m == 2
    fact = stf_factorize(5, 11)
    assert fact.basis_copies == 0
    assert fact.core_indices == tuple(range(1, 12))


def test_factorize_pieces_partition_and_verify():
    for n, m in ((2, 8), (3, 9), (4, 11), (5, 11), (3, 13), (2, 12), (4, 16)):
        phi = stf(n, m)
        fact = stf_factorize(n, m)
        pieces = list(fact.basis_indices) + [fact.core_indices]
        seen = sorted(i for piece in pieces for i in piece)
        assert seen == list(range(1, m + 1))
        for idx in fact.basis_indices:
            basis = phi.submatrix(idx)
            gram = basis.entries.conj().T @ basis.entries
            assert np.max(np.abs(gram - np.eye(n))) < 1e-12
        core = fact.prime_core
        assert np.array_equal(
            core.entries, phi.submatrix(fact.core_indices).entries)
        rep = check_tight(core, 1e-12)
        assert rep.is_tight and abs(rep.bound - core.m / n) < 1e-12
        assert is_prime_bruteforce(core)
        if core.m >= 2 * n:
            assert (columns_as_multiset(core.entries, 12)
                    == columns_as_multiset(stf(n, core.m).entries, 12))
        elif core.m > n:
            assert (columns_as_multiset(core.entries, 12)
                    == columns_as_multiset(
                        stf_low_redundancy(n, core.m).entries, 12))
        else:
            assert (columns_as_multiset(core.entries, 12)
                    == columns_as_multiset(np.eye(n), 12))
