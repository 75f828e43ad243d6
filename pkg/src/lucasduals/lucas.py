"""Lucas sequence evaluation over validated integer parameters.

Both sequences satisfy X_n = P*X_{n-1} - Q*X_{n-2}; U starts (0, 1)
and V starts (2, P). Validation rejects the parameter pairs whose
root ratio is a root of unity (P = 0, D = P^2 - 4Q = 0, or
P^2 in {Q, 2Q, 3Q}), so every accepted pair has U_n != 0 for n >= 1
and the whole valuation layer can rely on that.

Modular evaluation powers the companion matrix [[P, -Q], [1, 0]],
which is exact for every modulus >= 2, powers of two included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


class InvalidParamsError(ValueError):
    """Base class for parameter validation failures."""


class ZeroParameterError(InvalidParamsError):
    """P = 0 or Q = 0."""


class ZeroDiscriminantError(InvalidParamsError):
    """P^2 = 4Q: repeated root."""


class DegenerateError(InvalidParamsError):
    """Root ratio is a root of unity (P^2 in {Q, 2Q, 3Q})."""


class SequenceKind(Enum):
    FIRST = "U"
    SECOND = "V"


@dataclass(frozen=True)
class LucasParams:
    """Validated recurrence parameters; build through new_params()."""

    P: int
    Q: int
    D: int
    regular: bool

    def __repr__(self) -> str:  # compact, since these appear in test output a lot
        tag = "regular" if self.regular else "irregular"
        return f"LucasParams(P={self.P}, Q={self.Q}, D={self.D}, {tag})"


def new_params(p: int, q: int) -> LucasParams:
    """Validate (P, Q) and compute the discriminant and regularity.

    Raises ZeroParameterError, ZeroDiscriminantError, or
    DegenerateError on the excluded pairs.
    """
    if p == 0 or q == 0:
        raise ZeroParameterError(f"P and Q must be nonzero, got ({p}, {q})")
    d = p * p - 4 * q
    if d == 0:
        raise ZeroDiscriminantError(f"discriminant is 0 for ({p}, {q})")
    if p * p in (q, 2 * q, 3 * q):
        raise DegenerateError(f"({p}, {q}) is degenerate: root ratio is a root of unity")
    return LucasParams(P=p, Q=q, D=d, regular=math.gcd(p, q) == 1)


FIBONACCI = new_params(1, -1)


@lru_cache(maxsize=1 << 17)
def _u(params: LucasParams, n: int) -> int:
    a, b = 0, 1  # U_0, U_1
    for _ in range(n):
        a, b = b, params.P * b - params.Q * a
    return a


@lru_cache(maxsize=1 << 17)
def _v(params: LucasParams, n: int) -> int:
    a, b = 2, params.P  # V_0, V_1
    for _ in range(n):
        a, b = b, params.P * b - params.Q * a
    return a


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")


def u(params: LucasParams, n: int) -> int:
    """Exact U_n."""
    _check_index(n)
    return _u(params, n)


def v(params: LucasParams, n: int) -> int:
    """Exact V_n."""
    _check_index(n)
    return _v(params, n)


def term(params: LucasParams, kind: SequenceKind, n: int) -> int:
    """Exact U_n or V_n, selected by kind."""
    return u(params, n) if kind is SequenceKind.FIRST else v(params, n)


def _companion_power(params: LucasParams, n: int, m: int) -> tuple[int, int]:
    """First column of [[P, -Q], [1, 0]]^n mod m: (U_{n+1}, U_n)."""
    a = params.P % m
    b = (-params.Q) % m
    # x accumulates the power, s is the running square.
    x00, x01, x10, x11 = 1, 0, 0, 1
    s00, s01, s10, s11 = a, b, 1, 0
    e = n
    while e:
        if e & 1:
            x00, x01, x10, x11 = (
                (x00 * s00 + x01 * s10) % m,
                (x00 * s01 + x01 * s11) % m,
                (x10 * s00 + x11 * s10) % m,
                (x10 * s01 + x11 * s11) % m,
            )
        e >>= 1
        if e:
            s00, s01, s10, s11 = (
                (s00 * s00 + s01 * s10) % m,
                (s00 * s01 + s01 * s11) % m,
                (s10 * s00 + s11 * s10) % m,
                (s10 * s01 + s11 * s11) % m,
            )
    return x00, x10


def u_mod(params: LucasParams, n: int, m: int) -> int:
    """U_n mod m for any modulus m >= 2, in O(log n) matrix steps."""
    _check_index(n)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return _companion_power(params, n, m)[1]


def v_mod(params: LucasParams, n: int, m: int) -> int:
    """V_n mod m via the identity V_n = 2*U_{n+1} - P*U_n."""
    _check_index(n)
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    u_next, u_n = _companion_power(params, n, m)
    return (2 * u_next - params.P * u_n) % m
