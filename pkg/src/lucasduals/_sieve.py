"""Prime sieves backing trial division and the scan kernels.

Built lazily, cached per bound, returned read-only so concurrent
readers can share them.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=8)
def prime_mask(limit: int) -> np.ndarray:
    """Boolean mask of primality for 0..limit."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    mask = np.ones(limit + 1, dtype=bool)
    mask[: min(2, limit + 1)] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    mask.setflags(write=False)
    return mask


@lru_cache(maxsize=8)
def primes_up_to(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    primes = np.flatnonzero(prime_mask(limit)).astype(np.int64)
    primes.setflags(write=False)
    return primes


@lru_cache(maxsize=4)
def spf_up_to(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0)."""
    if limit < 1:
        raise ValueError("limit must be positive")
    spf = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 2:
        spf[2::2] = 2
    for p in range(3, math.isqrt(limit) + 1, 2):
        if spf[p] == 0:
            # Odd multiples only; even ones already carry 2.
            view = spf[p * p :: 2 * p]
            view[view == 0] = p
    untouched = np.flatnonzero(spf == 0)
    spf[untouched] = untouched
    spf[:2] = 0
    spf.setflags(write=False)
    return spf


def factor_with_spf(n: int, spf: np.ndarray) -> list[tuple[int, int]]:
    """Factor 2 <= n < len(spf) into sorted (prime, exponent) pairs."""
    out: list[tuple[int, int]] = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out
