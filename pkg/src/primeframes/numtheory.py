"""Small integer routines shared by the construction modules."""

from __future__ import annotations


def is_prime_int(k: int) -> bool:
    """Trial-division primality test for ordinary integers."""
    if k < 2:
        return False
    if k < 4:
        return True
    if k % 2 == 0:
        return False
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


def prime_power_factorization(k: int) -> list[tuple[int, int]]:
    """Factor k >= 1 into [(prime, exponent), ...] with primes ascending."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            e = 0
            while k % d == 0:
                k //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if k > 1:
        out.append((k, 1))
    return out


def reachable_sums(limit: int, parts) -> bytearray:
    """Coin-problem table: entry v is 1 iff v is a sum of the given parts.

    Parts may repeat any number of times; the empty sum makes 0 reachable.
    """
    reach = bytearray(limit + 1)
    reach[0] = 1
    for p in parts:
        if p <= 0:
            raise ValueError("parts must be positive")
        for v in range(p, limit + 1):
            if reach[v - p]:
                reach[v] = 1
    return reach
