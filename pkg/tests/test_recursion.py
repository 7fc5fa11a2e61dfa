from __future__ import annotations

import json

import pytest

from gga_verify.errors import ParamOutOfRange
from gga_verify.partitions import series_E
from gga_verify.qseries import eq_up_to, from_coeffs, q_power, series_zero
from gga_verify.recursion import (
    CheckReport,
    Mismatch,
    c_series,
    coeff_table,
    stop_depth,
    verify_c_expansion,
    verify_hp_expansion,
    verify_hp_step,
    verify_limits,
    verify_main,
    verify_mn_tables,
)

from oracles import restricted_partition_count


def test_c_series_base_products() -> None:
    assert c_series(2, 1, 6).coeffs == (1, 1, 1, 1, 2, 2, 2)
    assert c_series(2, 2, 7).coeffs == (1, 0, 0, 1, 1, 1, 1, 1)
    for n in range(8):
        assert c_series(2, 1, 7)[n] == restricted_partition_count(n, [1, 4, 7])


def test_c_series_extended_index_equals_gap_series() -> None:
    # index (r-1)J + ell with ell = r - i + 1 must match the gap-side series
    for r, i, J in [(2, 1, 1), (2, 2, 1), (3, 1, 1), (3, 3, 1), (2, 2, 2)]:
        ell = r - i + 1
        got = c_series(r, (r - 1) * J + ell, 24)
        assert eq_up_to(got, series_E(r, i, J, 24), 24)[0], (r, i, J)


def test_c_series_first_extended_value() -> None:
    # combined-numerator recursion, checked against hand expansion:
    # (C1 - C2 - q*C2) / q^2 for r = 2
    assert c_series(2, 3, 7).coeffs == (1, 0, 0, 0, 0, 1, 1, 1)


def test_c_series_truncation_monotonicity() -> None:
    small = c_series(3, 7, 18)
    large = c_series(3, 7, 33)
    assert large.coeffs[:19] == small.coeffs


def test_c_series_validation() -> None:
    with pytest.raises(ParamOutOfRange):
        c_series(1, 1, 5)
    with pytest.raises(ParamOutOfRange):
        c_series(2, 0, 5)
    with pytest.raises(ParamOutOfRange):
        c_series(2, 1, -1)


def test_coeff_table_initial_conditions() -> None:
    n = 30
    for r, J, anchor in [(2, 0, 2), (3, 1, 2), (4, 2, 1), (3, 0, 3)]:
        d0 = J + 1
        table = coeff_table("N", r, J, anchor, d0, n)
        for j in range(1, r + 1):
            if j < anchor:
                expected = q_power(2 * d0 * j - 1, n) + q_power(2 * d0 * (j - 1), n)
            elif j == anchor:
                expected = q_power(2 * d0 * (j - 1), n)
            else:
                expected = series_zero(n)
            assert table.entry(j, d0).coeffs == expected.coeffs, (r, J, anchor, j)


def test_coeff_table_m_kind_anchors_mirrored() -> None:
    n = 25
    r, J = 3, 0
    for i in range(1, r + 1):
        ell = r - i + 1
        m_table = coeff_table("M", r, J, ell, J + 1, n)
        n_table = coeff_table("N", r, J, i, J + 1, n)
        for j in range(1, r + 1):
            assert m_table.entry(j, J + 1).coeffs == n_table.entry(j, J + 1).coeffs


def test_coeff_table_degenerate_anchor_all_mass_at_one() -> None:
    # ell = r puts the single nonzero initial entry at j = 1
    n = 20
    table = coeff_table("M", 3, 0, 3, 1, n)
    assert table.entry(1, 1).coeffs == q_power(0, n).coeffs
    assert table.entry(2, 1).coeffs == series_zero(n).coeffs
    assert table.entry(3, 1).coeffs == series_zero(n).coeffs


def test_coeff_table_recursion_step_explicit() -> None:
    n = 30
    r, J, i = 2, 0, 2
    table = coeff_table("N", r, J, i, 3, n)
    for d in (1, 2):
        for j in (1, 2):
            upper = series_zero(n)
            for m in range(1, r - j + 2):
                upper = upper + table.entry(m, d)
            lower = series_zero(n)
            for m in range(1, r - j + 1):
                lower = lower + table.entry(m, d)
            expected = upper.shift(2 * (d + 1) * (j - 1)) + lower.shift(2 * (d + 1) * j - 1)
            assert table.entry(j, d + 1).coeffs == expected.coeffs


def test_coeff_table_hand_values_r2() -> None:
    # r=2, i=2, J=0: entry(1,1) = 1+q, entry(2,1) = q^2,
    # entry(2,2) = q^4 * entry(1,1) = q^4 + q^5
    table = coeff_table("N", 2, 0, 2, 2, 8)
    assert table.entry(1, 1).coeffs == (1, 1, 0, 0, 0, 0, 0, 0, 0)
    assert table.entry(2, 1).coeffs == (0, 0, 1, 0, 0, 0, 0, 0, 0)
    assert table.entry(2, 2).coeffs == (0, 0, 0, 0, 1, 1, 0, 0, 0)


def test_coeff_table_valuation_law() -> None:
    # entry (j, d) vanishes below degree 2d(j-1), for both kinds
    n = 40
    for kind, r, J, anchor in [("N", 2, 0, 2), ("N", 3, 1, 1), ("M", 3, 0, 2), ("M", 4, 1, 3)]:
        table = coeff_table(kind, r, J, anchor, J + 4, n)
        for d in range(J + 1, J + 5):
            for j in range(1, r + 1):
                v = table.entry(j, d).valuation()
                assert v is None or v >= 2 * d * (j - 1), (kind, r, J, anchor, j, d, v)


def test_coeff_table_validation() -> None:
    with pytest.raises(ParamOutOfRange):
        coeff_table("X", 2, 0, 1, 1, 10)
    with pytest.raises(ParamOutOfRange):
        coeff_table("N", 2, 0, 3, 1, 10)
    with pytest.raises(ParamOutOfRange):
        coeff_table("N", 2, 1, 1, 1, 10)  # d_max below initial depth


def test_mn_tables_equal() -> None:
    for r, i, J in [(2, 1, 0), (2, 2, 1), (3, 2, 0)]:
        report = verify_mn_tables(r, i, J, J + 3, 30)
        assert report.passed, report.to_json_dict()


def test_verify_hp_step_passes() -> None:
    assert verify_hp_step(2, 1, 2, 0, 20).passed
    assert verify_hp_step(3, 3, 2, 1, 20).passed
    assert verify_hp_step(3, 5, 3, 2, 18).passed


def test_verify_hp_step_ell_one_degenerates() -> None:
    report = verify_hp_step(3, 3, 1, 0, 16)
    assert report.passed


def test_verify_hp_step_validation() -> None:
    with pytest.raises(ParamOutOfRange):
        verify_hp_step(2, 2, 1, 0, 10)  # even k
    with pytest.raises(ParamOutOfRange):
        verify_hp_step(2, 1, 1, 1, 10)  # k below 2J+1


def test_verify_hp_expansion_base_and_deeper() -> None:
    assert verify_hp_expansion(2, 2, 0, 1, 25).passed
    assert verify_hp_expansion(2, 2, 0, 2, 25).passed
    assert verify_hp_expansion(3, 1, 1, 3, 25).passed


def test_verify_hp_expansion_every_depth_to_stop() -> None:
    n = 25
    r, i, J = 2, 2, 0
    for d in range(J + 1, stop_depth(n, J) + 1):
        assert verify_hp_expansion(r, i, J, d, n).passed, d


def test_verify_c_expansion_examples() -> None:
    assert verify_c_expansion(2, 1, 0, 1, 25).passed
    assert verify_c_expansion(2, 2, 1, 2, 25).passed
    assert verify_c_expansion(3, 2, 1, 3, 22).passed


def test_verify_c_expansion_every_depth_to_stop() -> None:
    n = 22
    r, ell, J = 2, 1, 0
    for d in range(J + 1, stop_depth(n, J) + 1):
        assert verify_c_expansion(r, ell, J, d, n).passed, d


def test_stop_depth() -> None:
    assert stop_depth(30) == 15   # first d with 2(d+1) > 30
    assert stop_depth(31) == 15
    assert stop_depth(0) == 0
    assert stop_depth(4, J=5) == 5  # floored at the table's initial depth


def test_verify_limits_passes() -> None:
    assert verify_limits(2, 2, 0, 30).passed
    assert verify_limits(3, 3, 2, 30).passed
    assert verify_limits(2, 1, 1, 21).passed  # odd truncation


def test_verify_main_passes() -> None:
    report = verify_main(2, 2, 0, 25)
    assert report.passed
    assert report.params["ell"] == 1
    assert verify_main(2, 1, 0, 25).passed
    assert verify_main(3, 2, 1, 20).passed


def test_verify_main_validation() -> None:
    with pytest.raises(ParamOutOfRange):
        verify_main(1, 1, 0, 10)


def test_report_json_schema() -> None:
    report = verify_main(2, 2, 0, 12)
    data = json.loads(json.dumps(report.to_json_dict()))
    assert set(data) == {"check", "params", "pass", "first_mismatch", "truncation"}
    assert data["check"] == "main"
    assert data["pass"] is True
    assert data["first_mismatch"] is None
    assert data["truncation"] == 12


def test_report_json_failure_shape() -> None:
    report = CheckReport(
        check="demo",
        params={"r": 2, "clause": "example"},
        passed=False,
        first_mismatch=Mismatch(3, 5, 7),
        truncation=9,
    )
    data = report.to_json_dict()
    assert data["pass"] is False
    assert data["first_mismatch"] == {"degree": 3, "lhs": "5", "rhs": "7"}


def test_mismatch_reporting_names_degree_and_values() -> None:
    ok, mismatch = eq_up_to(from_coeffs([1, 2, 3]), from_coeffs([1, 2, 4]), 2)
    assert not ok
    assert mismatch is not None and mismatch.degree == 2
    assert (mismatch.lhs, mismatch.rhs) == (3, 4)
