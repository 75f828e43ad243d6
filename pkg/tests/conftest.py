"""Shared fixtures and oracle helpers.

The oracle helpers here deliberately avoid every code path they are
used to check: valuations are stripped off exact integers by repeated
division, sequences are generated by the plain two-term recurrence,
and entry points are found by scanning those exact terms.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from lucasduals import InvalidParamsError, LucasParams, new_params


def exact_valuation(x: int | Fraction, p: int) -> int | None:
    """Brute-force valuation; None encodes "x is zero" (undefined)."""
    if isinstance(x, Fraction):
        num = exact_valuation(x.numerator, p)
        if num is None:
            return None
        den = exact_valuation(x.denominator, p)
        assert den is not None
        return num - den
    if x == 0:
        return None
    x = abs(x)
    count = 0
    while x % p == 0:
        x //= p
        count += 1
    return count


def u_sequence(params: LucasParams, n_max: int) -> list[int]:
    """U_0..U_{n_max} by the plain recurrence."""
    seq = [0, 1]
    for _ in range(2, n_max + 1):
        seq.append(params.P * seq[-1] - params.Q * seq[-2])
    return seq[: n_max + 1]


def v_sequence(params: LucasParams, n_max: int) -> list[int]:
    """V_0..V_{n_max} by the plain recurrence."""
    seq = [2, params.P]
    for _ in range(2, n_max + 1):
        seq.append(params.P * seq[-1] - params.Q * seq[-2])
    return seq[: n_max + 1]


def validated_pairs(bound: int) -> list[LucasParams]:
    """Every validation-accepted pair with |P|, |Q| <= bound."""
    pairs = []
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            try:
                pairs.append(new_params(p, q))
            except InvalidParamsError:
                pass
    return pairs


@pytest.fixture(scope="session")
def grid8() -> list[LucasParams]:
    return validated_pairs(8)


@pytest.fixture(scope="session")
def small_primes() -> list[int]:
    return [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
