"""Möbius duals of integer and rational sequences.

The dual of a sequence A at index n is the product of A_d^{μ(n/d)}
over the divisors d of n; multiplying duals back over divisors
recovers A_n. Applied to the U sequence the dual is always an
integer; applied to V it is an integer for every odd index and for
at most finitely many even ones, which is what the explorer scans
for.

Products accumulate numerator and denominator separately and reduce
once at the end, so intermediate values never churn through gcds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .arith import divisors, mobius
from .lucas import LucasParams, u, v


class MissingDivisorError(ValueError):
    """The input map lacks a divisor of n."""


class ZeroTermError(ValueError):
    """A divisor value is 0, so the dual is undefined."""


class InternalNonIntegralError(RuntimeError):
    """The U dual came out non-integral; signals a bug, never expected."""


@dataclass(frozen=True)
class DualValue:
    """Dual of V at one index, with its exactly-decided integrality."""

    index: int
    value: Fraction
    integral: bool


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")


def dual_of(values_at_divisors: Mapping[int, Fraction | int], n: int) -> Fraction:
    """Dual of an abstract sequence given its values on the divisors of n."""
    _check_index(n)
    num = 1
    den = 1
    for d in divisors(n):
        if d not in values_at_divisors:
            raise MissingDivisorError(f"missing value at divisor {d} of {n}")
        value = values_at_divisors[d]
        if value == 0:
            raise ZeroTermError(f"value at divisor {d} is 0")
        mu = mobius(n // d)
        if mu == 0:
            continue
        frac = value if isinstance(value, Fraction) else Fraction(value)
        if mu == 1:
            num *= frac.numerator
            den *= frac.denominator
        else:
            num *= frac.denominator
            den *= frac.numerator
    return Fraction(num, den)


def _dual_product(terms: list[int], signs: list[int]) -> tuple[int, int]:
    num = 1
    den = 1
    for term, sign in zip(terms, signs):
        if sign == 1:
            num *= term
        elif sign == -1:
            den *= term
    return num, den


def dual_u(params: LucasParams, n: int) -> int:
    """Dual of U at index n; integral by theorem, asserted here."""
    _check_index(n)
    divs = divisors(n)
    num, den = _dual_product(
        [u(params, d) for d in divs], [mobius(n // d) for d in divs]
    )
    quot, rem = divmod(num, den)
    if rem:
        raise InternalNonIntegralError(
            f"dual of U at n={n} for {params} is not an integer: {num}/{den}"
        )
    return quot


def dual_v(params: LucasParams, n: int) -> DualValue:
    """Dual of V at index n, exact, with integrality decided exactly."""
    _check_index(n)
    divs = divisors(n)
    num, den = _dual_product(
        [v(params, d) for d in divs], [mobius(n // d) for d in divs]
    )
    value = Fraction(num, den)
    return DualValue(index=n, value=value, integral=value.denominator == 1)


def dual_u_doubled(params: LucasParams, n: int) -> Fraction:
    """Dual of U at 2n, assembled from index-n duals.

    Equals dual_v(n) for odd n and dual_v(n) * dual_u(n) for even n;
    the doubled-index dual of U never needs index 2n directly.
    """
    _check_index(n)
    dv = dual_v(params, n).value
    if n % 2:
        return dv
    return dv * dual_u(params, n)
