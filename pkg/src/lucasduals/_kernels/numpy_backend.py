"""Vectorized pure-numpy twins of the jitted kernels.

Same contract, same int64 bounds discipline: the 3-limb split keeps
every intermediate under 2^63 for moduli below 2^47. The scan is
staged instead of fused: one batched powering over all (divisor,
prime) pairs, a grouped first-zero reduction, then one batched
powering at the squared moduli.
"""

from __future__ import annotations

import numpy as np

from .._sieve import factor_with_spf, spf_up_to

NAME = "numpy"
MAX_MODULUS = (1 << 47) - 1
_PLAIN_LIMIT = 3037000499  # isqrt(2^63 - 1)


def _mulmod(a: np.ndarray, b: np.ndarray, m: np.ndarray, plain: bool) -> np.ndarray:
    if plain:
        return a * b % m
    r = (a >> 32) * b % m
    r = (r << 16) % m
    r = (r + (a >> 16 & 0xFFFF) * b % m) % m
    r = (r << 16) % m
    return (r + (a & 0xFFFF) * b % m) % m


def u_mod_batch(p, q, n, m) -> np.ndarray:
    """U_{n[i]}(P[i], Q[i]) mod m[i] per row.

    p and q broadcast against n and m (pass scalars for a single
    sequence); every modulus must sit in [2, 2^47).
    """
    try:
        arrays = np.broadcast_arrays(
            *(np.asarray(a, dtype=np.int64) for a in (p, q, n, m))
        )
    except ValueError as exc:
        raise ValueError("parameter, index, and modulus arrays must align") from exc
    p, q, n, m = (np.ascontiguousarray(a) for a in arrays)
    if n.ndim != 1:
        raise ValueError("batch arrays must be one-dimensional")
    if m.size == 0:
        return np.empty(0, dtype=np.int64)
    if int(m.min()) < 2 or int(m.max()) > MAX_MODULUS:
        raise ValueError(f"moduli must lie in [2, {MAX_MODULUS}]")
    plain = int(m.max()) <= _PLAIN_LIMIT

    s00 = np.remainder(p, m)
    s01 = np.remainder(-q, m)
    s10 = np.ones_like(m)
    s11 = np.zeros_like(m)
    x00 = np.ones_like(m)
    x01 = np.zeros_like(m)
    x10 = np.zeros_like(m)
    x11 = np.ones_like(m)

    e = n.copy()
    for _ in range(int(n.max()).bit_length() if n.size else 0):
        odd = (e & 1).astype(bool)
        if odd.any():
            t00 = (_mulmod(x00, s00, m, plain) + _mulmod(x01, s10, m, plain)) % m
            t01 = (_mulmod(x00, s01, m, plain) + _mulmod(x01, s11, m, plain)) % m
            t10 = (_mulmod(x10, s00, m, plain) + _mulmod(x11, s10, m, plain)) % m
            t11 = (_mulmod(x10, s01, m, plain) + _mulmod(x11, s11, m, plain)) % m
            x00 = np.where(odd, t00, x00)
            x01 = np.where(odd, t01, x01)
            x10 = np.where(odd, t10, x10)
            x11 = np.where(odd, t11, x11)
        e >>= 1
        if not e.any():
            break
        t00 = (_mulmod(s00, s00, m, plain) + _mulmod(s01, s10, m, plain)) % m
        t01 = (_mulmod(s00, s01, m, plain) + _mulmod(s01, s11, m, plain)) % m
        t10 = (_mulmod(s10, s00, m, plain) + _mulmod(s11, s10, m, plain)) % m
        t11 = (_mulmod(s10, s01, m, plain) + _mulmod(s11, s11, m, plain)) % m
        s00, s01, s10, s11 = t00, t01, t10, t11
    return x10


def _sorted_divisors(n: int, spf: np.ndarray) -> list[int]:
    divs = [1]
    if n > 1:
        for prime, exp in factor_with_spf(n, spf):
            power = 1
            block = list(divs)
            for _ in range(exp):
                power *= prime
                divs.extend(d * power for d in block)
    divs.sort()
    return divs


def wss_scan_arrays(primes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per prime p (5 excluded by the caller): the Fibonacci entry
    point z, and whether p^2 already divides F_z."""
    primes = np.ascontiguousarray(primes, dtype=np.int64)
    if primes.size == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.uint8)
    if int(primes.max()) ** 2 > MAX_MODULUS:
        raise ValueError("prime too large for the squared-modulus kernel")

    chi = np.where(np.isin(primes % 5, (1, 4)), 1, -1).astype(np.int64)
    s = primes - chi
    spf = spf_up_to(int(s.max()))

    counts = np.empty(primes.shape[0], dtype=np.int64)
    flat_divs: list[int] = []
    for i, sv in enumerate(s.tolist()):
        divs = _sorted_divisors(sv, spf)
        counts[i] = len(divs)
        flat_divs.extend(divs)
    d_arr = np.asarray(flat_divs, dtype=np.int64)
    owner_primes = np.repeat(primes, counts)

    residues = u_mod_batch(1, -1, d_arr, owner_primes)
    starts = np.concatenate(([0], np.cumsum(counts)[:-1]))
    zero_at = np.flatnonzero(residues == 0)
    group = np.searchsorted(starts, zero_at, side="right") - 1
    groups_seen, first_zero = np.unique(group, return_index=True)
    if groups_seen.shape[0] != primes.shape[0]:
        raise AssertionError("some prime lacked an entry point in its divisor set")
    z = d_arr[zero_at[first_zero]]

    hit = (u_mod_batch(1, -1, z, primes * primes) == 0).astype(np.uint8)
    return z, hit
