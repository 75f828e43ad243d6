"""Exact multiplicative number theory: factoring, μ, φ, divisors,
Kronecker symbols, p-adic valuations.

Everything here is deterministic and exact. Rationals are
`fractions.Fraction` (kept normalized with positive denominator by the
stdlib); big integers are plain `int`. Factoring runs sieve-backed
trial division first and falls back to Brent's cycle-finding variant of
Pollard rho with a fixed iteration budget, so identical inputs always
take identical paths.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from ._sieve import factor_with_spf, primes_up_to, spf_up_to

Factorization = tuple[tuple[int, int], ...]

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_BUDGET = 1_000_000

# Whole-table factoring shortcut kept a little below the trial bound so
# the SPF sieve stays one array build.
_SPF_BOUND = 10**6

# Strong-pseudoprime witnesses: deterministic for n < 3.317e24.  Above
# that the extended fixed list is heuristic but still deterministic.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BELOW = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_WITNESSES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


class FactorizationOverflowError(ArithmeticError):
    """A cofactor resisted the configured factoring budget."""


def _miller_rabin(n: int, base: int) -> bool:
    if base % n == 0:
        return True
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic primality test for desk-scale integers."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_BELOW:
        witnesses = _MR_WITNESSES + _MR_EXTRA_WITNESSES
    return all(_miller_rabin(n, a) for a in witnesses)


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (-(-n.bit_length() // k))  # upper bound on the root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int] | None:
    """Return (r, k) with r**k == n and k >= 2, or None."""
    for k in range(2, n.bit_length() + 1):
        r = _iroot(n, k)
        if r < 2:
            break
        if r**k == n:
            return r, k
    return None


def _brent_rho(n: int, c: int, budget: int) -> tuple[int, int]:
    """One Brent-rho attempt on odd composite n with offset c.

    Returns (factor, iterations_used); factor is 0 when the attempt
    failed within the budget or degenerated (factor == n).
    """
    y, r, q = 2, 1, 1
    g, x, ys = 1, 2, 2
    used = 0
    while g == 1 and used < budget:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            step = min(128, r - k)
            for _ in range(step):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += step
        used += 2 * r
        r <<= 1
    if g == n:
        # Backtrack one multiplication at a time.
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    if g == 1 or g == n or used >= budget:
        return (g if 1 < g < n else 0), max(used, 1)
    return g, used


def factorize(
    n: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> Factorization:
    """Factor |n| into sorted (prime, exponent) pairs.

    Raises FactorizationOverflowError when a composite cofactor
    survives trial division, perfect-power stripping, and the rho
    budget.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    if n == 1:
        return ()
    if n <= _SPF_BOUND:
        return tuple(factor_with_spf(n, spf_up_to(_SPF_BOUND)))

    found: dict[int, int] = {}
    for p in primes_up_to(trial_bound).tolist():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1:
        if n <= trial_bound * trial_bound or is_prime(n):
            # Any survivor below trial_bound^2 is prime by construction.
            found[n] = found.get(n, 0) + 1
        else:
            for p, e in _factor_hard(n, rho_budget):
                found[p] = found.get(p, 0) + e
    return tuple(sorted(found.items()))


def _factor_hard(n: int, budget: int) -> list[tuple[int, int]]:
    """Factor a composite with no prime factor below the trial bound."""
    out: dict[int, int] = {}
    stack = [(n, 1)]
    remaining = budget
    while stack:
        m, mult = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + mult
            continue
        power = _perfect_power(m)
        if power is not None:
            root, k = power
            stack.append((root, mult * k))
            continue
        factor = 0
        c = 1
        while remaining > 0 and factor == 0 and c <= 64:
            factor, used = _brent_rho(m, c, remaining)
            remaining -= used
            c += 1
        if factor == 0:
            raise FactorizationOverflowError(
                f"factoring budget exhausted on a {m.bit_length()}-bit cofactor"
            )
        stack.append((factor, mult))
        stack.append((m // factor, mult))
    return sorted(out.items())


@lru_cache(maxsize=1 << 15)
def _factorization_cached(n: int) -> Factorization:
    return factorize(n)


def mobius(n: int) -> int:
    """μ(n): (-1)^k on squarefree n with k prime factors, else 0."""
    if n < 1:
        raise ValueError("mobius is defined for positive integers")
    if n == 1:
        return 1
    fac = _factorization_cached(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    """Euler's φ(n), the count of 1 <= k <= n coprime to n."""
    if n < 1:
        raise ValueError("totient is defined for positive integers")
    result = n
    for p, _ in _factorization_cached(n):
        result -= result // p
    return result


@lru_cache(maxsize=1 << 15)
def _divisor_tuple(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factorization_cached(n):
        power = 1
        block = list(divs)
        for _ in range(e):
            power *= p
            divs.extend(d * power for d in block)
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("divisors is defined for positive integers")
    return list(_divisor_tuple(n))


def valuation(x: int | Fraction, p: int) -> int:
    """v_p(x) for nonzero x: the exponent of p in x.

    Negative for rationals whose reduced denominator carries p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(x, Fraction):
        if x == 0:
            raise ValueError("valuation of 0 is undefined")
        return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    return _int_valuation(x, p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    count = 0
    while True:
        q, r = divmod(n, p)
        if r:
            return count
        n = q
        count += 1


def p_free_part(m: int, p: int) -> int:
    """m with every factor of p divided out; keeps the sign of m."""
    if m == 0:
        raise ValueError("p_free_part of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    while m % p == 0:
        m //= p
    return m


def kronecker(d: int, p: int) -> int:
    """Kronecker symbol (d|p) for prime p: 0, 1, or -1."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    r = d % p
    if r == 0:
        return 0
    e = pow(r, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def is_squarefree(
    m: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> bool:
    """True when no prime divides m twice; sign is ignored."""
    if m == 0:
        raise ValueError("is_squarefree is undefined at 0")
    m = abs(m)
    if m == 1:
        return True
    fac = factorize(m, trial_bound=trial_bound, rho_budget=rho_budget)
    return all(e == 1 for _, e in fac)
