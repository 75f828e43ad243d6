"""Jitted scan kernels.

All arithmetic stays in int64. Products are kept under 2^63 by a
3-limb 16-bit split in _mulmod, valid for any modulus below 2^47;
moduli under isqrt(2^63) take the single-multiply path.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"
MAX_MODULUS = (1 << 47) - 1
_PLAIN_LIMIT = 3037000499  # isqrt(2^63 - 1): below this a*b fits int64


@njit(cache=True)
def _mulmod(a, b, m):
    # a, b in [0, m); m < 2^47
    if m <= _PLAIN_LIMIT:
        return (a * b) % m
    r = ((a >> 32) * b) % m
    r = (r << 16) % m
    r = (r + ((a >> 16) & 0xFFFF) * b % m) % m
    r = (r << 16) % m
    return (r + (a & 0xFFFF) * b % m) % m


@njit(cache=True)
def _u_mod(p_coef, q_neg, n, m):
    # U_n mod m for the recurrence with P = p_coef, -Q = q_neg (both
    # already reduced mod m); powers the companion matrix.
    x00, x01, x10, x11 = np.int64(1), np.int64(0), np.int64(0), np.int64(1)
    s00, s01, s10, s11 = p_coef, q_neg, np.int64(1), np.int64(0)
    e = n
    while e > 0:
        if e & 1:
            t00 = (_mulmod(x00, s00, m) + _mulmod(x01, s10, m)) % m
            t01 = (_mulmod(x00, s01, m) + _mulmod(x01, s11, m)) % m
            t10 = (_mulmod(x10, s00, m) + _mulmod(x11, s10, m)) % m
            t11 = (_mulmod(x10, s01, m) + _mulmod(x11, s11, m)) % m
            x00, x01, x10, x11 = t00, t01, t10, t11
        e >>= 1
        if e > 0:
            t00 = (_mulmod(s00, s00, m) + _mulmod(s01, s10, m)) % m
            t01 = (_mulmod(s00, s01, m) + _mulmod(s01, s11, m)) % m
            t10 = (_mulmod(s10, s00, m) + _mulmod(s11, s10, m)) % m
            t11 = (_mulmod(s10, s01, m) + _mulmod(s11, s11, m)) % m
            s00, s01, s10, s11 = t00, t01, t10, t11
    return x10


@njit(cache=True)
def _u_mod_batch(p, q, n, m, out):
    for i in range(n.shape[0]):
        mi = m[i]
        out[i] = _u_mod(p[i] % mi, (-q[i]) % mi, n[i], mi)


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
    out = np.empty_like(n)
    _u_mod_batch(p, q, n, m, out)
    return out


@njit(cache=True)
def _wss_kernel(primes, z_out, hit_out):
    for i in range(primes.shape[0]):
        p = primes[i]
        r5 = p % 5
        if r5 == 0:
            # Caller filters 5 out; keep the row inert if it slips in.
            z_out[i] = 0
            hit_out[i] = 0
            continue
        chi = np.int64(1) if (r5 == 1 or r5 == 4) else np.int64(-1)
        s = p - chi
        one = np.int64(1)  # both companion coefficients for P=1, Q=-1
        z = np.int64(0)
        d = np.int64(1)
        while d * d <= s:
            if s % d == 0 and _u_mod(one, one, d, p) == 0:
                z = d
                break
            d += 1
        if z == 0:
            dd = d - 1
            while dd >= 1:
                if s % dd == 0:
                    e = s // dd
                    if _u_mod(one, one, e, p) == 0:
                        z = e
                        break
                dd -= 1
        z_out[i] = z
        hit_out[i] = 1 if _u_mod(one, one, z, p * p) == 0 else 0


def wss_scan_arrays(primes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per prime p (5 excluded by the caller): the Fibonacci entry
    point z, and whether p^2 already divides F_z."""
    primes = np.ascontiguousarray(primes, dtype=np.int64)
    if primes.size and int(primes.max()) ** 2 > MAX_MODULUS:
        raise ValueError("prime too large for the squared-modulus kernel")
    z = np.zeros(primes.shape[0], dtype=np.int64)
    hit = np.zeros(primes.shape[0], dtype=np.uint8)
    _wss_kernel(primes, z, hit)
    return z, hit
