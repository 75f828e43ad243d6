"""Scanners: integrality, characteristic gaps, square-entry primes."""

from __future__ import annotations

import json

import pytest

import lucasduals.explorer as explorer
from lucasduals import (
    FIBONACCI,
    FactorizationOverflowError,
    InvalidParamsError,
    ScanReport,
    ScanRow,
    characteristic_gap_scan,
    find_characteristic_factor,
    new_params,
    scan_integral_dual_v,
    squarefree_dual_scan,
    wss_scan,
)
from lucasduals._kernels import BACKEND_ENV_VAR


# --- integrality scan ----------------------------------------------------------


def test_scan_integral_fibonacci():
    report = scan_integral_dual_v(FIBONACCI, 60)
    assert [row.key for row in report.rows] == [2]
    assert report.rows[0].value == "3"
    assert not report.theorem_violations
    assert report.metadata["regular"] is True


def test_scan_integral_rows_sorted_and_even():
    report = scan_integral_dual_v(new_params(2, -2), 80)
    keys = [row.key for row in report.rows]
    assert keys == sorted(keys)
    assert all(key % 2 == 0 for key in keys)


def test_scan_integral_regular_pair_respects_bound():
    report = scan_integral_dual_v(new_params(3, 1), 400)
    assert all(row.key <= 12 for row in report.rows)
    assert not report.theorem_violations


def test_scan_integral_via_valuations_agrees():
    for p, q in [(1, -1), (3, 1), (8, 2), (2, 12), (6, 2), (2, -2), (-4, 2)]:
        params = new_params(p, q)
        exact = scan_integral_dual_v(params, 80)
        fast = scan_integral_dual_v(params, 80, via_valuations=True)
        assert [row.key for row in exact.rows] == [row.key for row in fast.rows], (p, q)
        assert not any("VALUATION_FALLBACK" in row.flags for row in fast.rows)


def test_scan_integral_rejects_tiny_bound():
    with pytest.raises(ValueError):
        scan_integral_dual_v(FIBONACCI, 1)


# --- characteristic factors -------------------------------------------------------


def test_find_characteristic_factor_fixtures():
    assert find_characteristic_factor(FIBONACCI, 12) is None
    assert find_characteristic_factor(FIBONACCI, 5) == 5
    assert find_characteristic_factor(FIBONACCI, 7) == 13
    assert find_characteristic_factor(FIBONACCI, 10) == 11
    assert find_characteristic_factor(FIBONACCI, 1) is None
    assert find_characteristic_factor(new_params(2, 12), 2) == 2


def test_find_characteristic_factor_budget_overflow():
    with pytest.raises(FactorizationOverflowError):
        find_characteristic_factor(FIBONACCI, 401, trial_bound=100, rho_budget=5)


def test_gap_scan_fibonacci():
    report = characteristic_gap_scan(FIBONACCI, 60)
    assert [row.key for row in report.rows] == [1, 2, 6, 12]
    assert not report.theorem_violations


def test_gap_scan_irregular_pair_is_finite():
    report = characteristic_gap_scan(new_params(2, 12), 40)
    keys = [row.key for row in report.rows]
    assert 1 in keys
    assert len(keys) < 40
    # irregular pairs carry no bound claim, so nothing may be flagged
    assert not report.theorem_violations


def test_gap_scan_overflow_becomes_unresolved_row(monkeypatch):
    def explode(params, n, **kwargs):
        if n == 7:
            raise FactorizationOverflowError("synthetic budget blowout")
        return real(params, n, **kwargs)

    real = explorer.find_characteristic_factor
    monkeypatch.setattr(explorer, "find_characteristic_factor", explode)
    report = characteristic_gap_scan(FIBONACCI, 10)
    unresolved = [row for row in report.rows if "UNRESOLVED" in row.flags]
    assert [row.key for row in unresolved] == [7]
    assert report.metadata["unresolved"] == 1


# --- square-entry prime scan --------------------------------------------------------


def test_wss_scan_finds_nothing_small():
    report = wss_scan(20_000)
    assert report.rows == ()
    assert report.metadata["backend"] in ("numba", "numpy")
    assert report.metadata["primes_scanned"] > 2000
    assert report.metadata["excluded"] == (5,)


def test_wss_scan_backend_parity(monkeypatch):
    monkeypatch.setenv(BACKEND_ENV_VAR, "numba")
    jit_rows = wss_scan(5_000)
    monkeypatch.setenv(BACKEND_ENV_VAR, "numpy")
    vec_rows = wss_scan(5_000)
    assert jit_rows.jsonl_lines() == vec_rows.jsonl_lines()
    assert jit_rows.metadata["backend"] == "numba"
    assert vec_rows.metadata["backend"] == "numpy"


def test_wss_scan_bound_validation():
    with pytest.raises(ValueError):
        wss_scan(2)
    with pytest.raises(ValueError):
        wss_scan(explorer.WSS_PRIME_CAP + 1)


def test_squarefree_dual_scan_default_window():
    report = squarefree_dual_scan(120)
    assert [(row.key, row.flags) for row in report.rows] == [(6, ("KNOWN_EXCEPTION",))]
    assert report.rows[0].value == "4"


def test_squarefree_dual_scan_clean_below_six():
    assert squarefree_dual_scan(5).rows == ()


# --- report mechanics -----------------------------------------------------------


def test_reports_are_deterministic():
    first = scan_integral_dual_v(FIBONACCI, 60)
    second = scan_integral_dual_v(FIBONACCI, 60)
    assert first.jsonl_lines() == second.jsonl_lines()
    assert first.tsv_lines() == second.tsv_lines()


def test_jsonl_rows_parse_with_expected_fields():
    report = characteristic_gap_scan(FIBONACCI, 14)
    for line in report.jsonl_lines():
        row = json.loads(line)
        assert row["kind"] == "characteristic-gap"
        assert row["P"] == "1" and row["Q"] == "-1"
        assert isinstance(row["n"], int)
        assert isinstance(row["flags"], list)
        if "value" in row:
            assert isinstance(row["value"], str)  # big integers stay exact


def test_theorem_violation_rows_surface():
    flagged = ScanRow(
        kind="integral-dual-v",
        key_name="n",
        key=44,
        value="1",
        flags=("THEOREM_VIOLATION",),
    )
    report = ScanReport(
        scan="scan-integral", params=FIBONACCI, rows=(flagged,), metadata={}
    )
    assert report.theorem_violations == (flagged,)


def test_scan_rejects_invalid_params_upstream():
    with pytest.raises(InvalidParamsError):
        scan_integral_dual_v(new_params(2, 1), 40)
