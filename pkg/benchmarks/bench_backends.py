#!/usr/bin/env python3
"""Benchmark the jitted scan kernels against their pure-numpy twins.

Both backends implement the same contract (see lucasduals._kernels);
this script times them on identical inputs, verifies the outputs match
bit for bit, and reports the speedup.  The first jitted call includes
compilation unless a warm cache exists, so every timed section runs a
throwaway warmup first.

Usage:
    python3 benchmarks/bench_backends.py [--prime-max N] [--batch N] [--repeat K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lucasduals._kernels import get_backend
from lucasduals._sieve import primes_up_to


def _time(func, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def bench_wss(prime_max: int, repeat: int) -> None:
    primes = primes_up_to(prime_max)
    primes = primes[primes != 5].astype(np.int64)
    print(f"\nfused square-entry scan over {len(primes)} primes (<= {prime_max})")
    results = {}
    timings = {}
    for name in ("numba", "numpy"):
        backend = get_backend(name)
        backend.wss_scan_arrays(primes[:64])  # warm up (jit / allocator)
        timings[name] = _time(lambda b=backend: results.setdefault(name, b.wss_scan_arrays(primes)), repeat)
        print(f"  {name:6s} {timings[name] * 1000:10.1f} ms")
    z_a, hit_a = results["numba"]
    z_b, hit_b = results["numpy"]
    assert (z_a == z_b).all() and (hit_a == hit_b).all(), "backend outputs diverge"
    print(f"  outputs identical; {int(hit_a.sum())} hits; "
          f"speedup numba/numpy = {timings['numpy'] / timings['numba']:.2f}x")


def bench_batch(batch: int, repeat: int) -> None:
    rng = np.random.default_rng(20260822)
    p = rng.integers(-50, 51, size=batch).astype(np.int64)
    q = rng.integers(-50, 51, size=batch).astype(np.int64)
    n = rng.integers(0, 10**9, size=batch).astype(np.int64)
    m = rng.integers(2, (1 << 47) - 1, size=batch).astype(np.int64)
    print(f"\nbatched modular evaluation, {batch} rows, indices to 10^9")
    results = {}
    timings = {}
    for name in ("numba", "numpy"):
        backend = get_backend(name)
        backend.u_mod_batch(p[:64], q[:64], n[:64], m[:64])  # warm up
        timings[name] = _time(lambda b=backend: results.setdefault(name, b.u_mod_batch(p, q, n, m)), repeat)
        print(f"  {name:6s} {timings[name] * 1000:10.1f} ms")
    assert (results["numba"] == results["numpy"]).all(), "backend outputs diverge"
    print(f"  outputs identical; "
          f"speedup numba/numpy = {timings['numpy'] / timings['numba']:.2f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--prime-max", type=int, default=1_000_000,
                        help="prime bound for the fused scan (default 10^6)")
    parser.add_argument("--batch", type=int, default=200_000,
                        help="row count for the batched evaluator (default 2*10^5)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions, best-of (default 3)")
    args = parser.parse_args()
    bench_wss(args.prime_max, args.repeat)
    bench_batch(args.batch, args.repeat)


if __name__ == "__main__":
    main()
