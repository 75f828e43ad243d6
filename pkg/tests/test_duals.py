"""Divisor-product transforms: generic duals, duals of U and V, doubling."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import u_sequence, validated_pairs
from lucasduals import (
    FIBONACCI,
    MissingDivisorError,
    ZeroTermError,
    divisors,
    dual_of,
    dual_u,
    dual_u_doubled,
    dual_v,
    new_params,
    u,
)


# --- generic dual -----------------------------------------------------------


def test_dual_of_identity_sequence():
    values = {d: Fraction(d) for d in divisors(6)}
    assert dual_of(values, 6) == 1


def test_dual_of_single_divisor():
    assert dual_of({1: Fraction(7, 3)}, 1) == Fraction(7, 3)


def test_dual_of_geometric_sequence():
    values = {d: Fraction(2**d) for d in divisors(4)}
    assert dual_of(values, 4) == 4  # exponent totient(4) = 2


def test_dual_of_missing_divisor():
    with pytest.raises(MissingDivisorError):
        dual_of({1: Fraction(1), 2: Fraction(2), 6: Fraction(6), 3: Fraction(3)}, 12)


def test_dual_of_zero_term_even_at_mobius_zero_divisor():
    # 1 has mu(4/1) = 0, but a zero anywhere makes the dual undefined
    values = {1: Fraction(0), 2: Fraction(1), 4: Fraction(3)}
    with pytest.raises(ZeroTermError):
        dual_of(values, 4)


def test_dual_of_index_must_be_positive():
    with pytest.raises(ValueError):
        dual_of({1: Fraction(1)}, 0)


# --- duals of U and V --------------------------------------------------------


def test_dual_u_fibonacci_fixtures():
    assert dual_u(FIBONACCI, 1) == 1
    assert dual_u(FIBONACCI, 6) == 4
    assert dual_u(FIBONACCI, 12) == 6
    assert dual_u(new_params(2, 12), 2) == 2


def test_dual_u_returns_plain_int():
    assert isinstance(dual_u(FIBONACCI, 12), int)


def test_dual_v_fibonacci_fixtures():
    three = dual_v(FIBONACCI, 3)
    assert (three.index, three.value, three.integral) == (3, Fraction(4), True)
    four = dual_v(FIBONACCI, 4)
    assert (four.value, four.integral) == (Fraction(7, 3), False)
    one = dual_v(FIBONACCI, 1)
    assert (one.value, one.integral) == (Fraction(1), True)
    assert dual_v(new_params(5, 3), 1).value == 5


def test_dual_u_doubled_fixtures():
    assert dual_u_doubled(FIBONACCI, 3) == 4
    assert dual_u_doubled(FIBONACCI, 2) == 3
    assert dual_u_doubled(FIBONACCI, 1) == 1  # = P
    assert dual_u_doubled(new_params(5, 3), 1) == 5


def test_dual_index_must_be_positive():
    for func in (dual_u, dual_v, dual_u_doubled):
        with pytest.raises(ValueError):
            func(FIBONACCI, 0)


# --- properties ---------------------------------------------------------------


def test_inversion_roundtrip_on_random_sequences():
    # multiplying the duals back over divisors recovers the sequence
    rng = random.Random(20260822)
    for _ in range(60):
        n = rng.randint(1, 200)
        values = {
            d: Fraction(rng.choice([x for x in range(-20, 21) if x]))
            for d in divisors(n)
        }
        product = Fraction(1)
        for d in divisors(n):
            product *= dual_of({e: values[e] for e in divisors(d)}, d)
        assert product == values[n], n


def test_dual_u_integrality_and_consistency():
    for params in (FIBONACCI, new_params(2, 12), new_params(6, 2)):
        useq = u_sequence(params, 300)
        for n in range(1, 301):
            product = 1
            for d in divisors(n):
                product *= dual_u(params, d)
            assert product == useq[n], (params, n)


def test_dual_v_integral_for_odd_indices():
    for params in (FIBONACCI, new_params(2, 12), new_params(8, 2)):
        for n in range(1, 502, 2):
            assert dual_v(params, n).integral, (params, n)


def test_doubling_transport_small_grid():
    for params in validated_pairs(4):
        for n in range(1, 60):
            assert dual_u(params, 2 * n) == dual_u_doubled(params, n), (params, n)
