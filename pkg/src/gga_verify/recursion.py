"""Product-side series, expansion coefficient tables, and identity verifiers.

The product side is a family of series indexed by positive integers: indices
1..r are congruence-restricted products, and larger indices are defined by a
subtract-and-deshift recursion level by level.  Writing an index as
(r-1)*g + i with g >= 1 and 2 <= i <= r, level g is built from level g-1 by

    C[g, 1] = C[g-1, r]            (the two spellings of one index agree)
    C[g, i] = (C[g-1, r-i+1] - C[g-1, r-i+2] - q^(2g(i-1)-1) * C[g, i-1])
              / q^(2g(i-1))

The two displayed fractions of the recursion are combined over the common
denominator before dividing: the chained term alone has a 1/q pole (its
constant coefficient is 1), so only the combination is a power series.

Both the product side and the quotient side satisfy the same expansion
recurrence with coefficient tables M (product) and N (quotient); the tables
agree entrywise when the anchors are related by ell = r - i + 1, and their
j = 1 entries stabilize q-adically to the two sides of the main identity.
Every verifier returns a structured report: a failing identity at desk scale
means a transcription bug, and diagnosis needs the witness coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import ParamOutOfRange
from .hilbert import hp_notation
from .partitions import IdentityParams, allowed_parts_C, count_C, count_D, series_E
from .qseries import (
    Mismatch,
    TruncatedSeries,
    eq_up_to,
    product_geometric_inverses,
    q_power,
    series_one,
    series_zero,
)


def _decompose_index(r: int, index: int) -> tuple[int, int]:
    """Write index > r as (r-1)*g + i with g >= 1 and 2 <= i <= r."""
    i = (index - 2) % (r - 1) + 2
    return (index - i) // (r - 1), i


def _recursion_padding(r: int, g_stop: int) -> int:
    """Certified-range loss budget for the level cascade up to g_stop.

    Each level-g entry costs one exact division by q^(2g(i-1)); one extra
    unit per step keeps the bound a safe overestimate.
    """
    return sum(2 * g * (i - 1) + 1 for g in range(1, g_stop + 1) for i in range(2, r + 1))


def c_series(r: int, index: int, n: int) -> TruncatedSeries:
    """Product-side series of any positive index, certified through degree n.

    Indices 1..r expand the congruence product directly.  Larger indices run
    the level cascade bottom-up on a padded working truncation so that the
    certified range still covers n after all exact divisions.
    """
    if r < 2:
        raise ParamOutOfRange(f"r = {r} but r >= 2 is required")
    if index < 1:
        raise ParamOutOfRange(f"index {index} must be positive")
    if n < 0:
        raise ParamOutOfRange(f"N = {n} must be nonnegative")
    if index <= r:
        return product_geometric_inverses(allowed_parts_C(r, index, n), n)

    g_stop, i_stop = _decompose_index(r, index)
    work = n + _recursion_padding(r, g_stop)
    row = [
        product_geometric_inverses(allowed_parts_C(r, j, work), work)
        for j in range(1, r + 1)
    ]
    for g in range(1, g_stop + 1):
        new = [row[r - 1]]
        for i in range(2, r + 1):
            w = 2 * g * (i - 1)
            numerator = row[r - i] - row[r - i + 1] - new[i - 2].shift(w - 1)
            new.append(numerator.div_q_pow(w))
        row = new
    return row[i_stop - 1].truncated(n)


@dataclass(frozen=True)
class CoeffTable:
    """Expansion coefficients indexed by (j, d), j in 1..r, depth d >= J+1.

    kind "M" anchors the initial conditions at position r - anchor + 1
    (product side, anchor = ell); kind "N" anchors at position anchor
    (quotient side, anchor = i).  Entry (j, d) has q-adic valuation at least
    2*d*(j-1), which is what makes the depth-limited limit checks exact.
    """

    kind: str
    r: int
    J: int
    anchor: int
    d_max: int
    trunc: int
    entries: Mapping[tuple[int, int], TruncatedSeries]

    def entry(self, j: int, d: int) -> TruncatedSeries:
        return self.entries[(j, d)]


def coeff_table(kind: str, r: int, J: int, anchor: int, d_max: int, n: int) -> CoeffTable:
    """Fill the expansion coefficient recurrence from depth J+1 up to d_max.

    Initial conditions at depth J+1, with p the anchor position:
        q^(2(J+1)j - 1) + q^(2(J+1)(j-1))   for j < p,
        q^(2(J+1)(j-1))                     for j = p,
        0                                   for j > p.
    One depth step:
        entry(j, d+1) = q^(2(d+1)(j-1)) * sum_{m=1}^{r-j+1} entry(m, d)
                      + q^(2(d+1)j - 1) * sum_{m=1}^{r-j}   entry(m, d).
    """
    if kind not in ("M", "N"):
        raise ParamOutOfRange(f"kind {kind!r} must be 'M' or 'N'")
    if r < 2:
        raise ParamOutOfRange(f"r = {r} but r >= 2 is required")
    if J < 0:
        raise ParamOutOfRange(f"J = {J} must be nonnegative")
    if not 1 <= anchor <= r:
        raise ParamOutOfRange(f"anchor {anchor} outside 1..{r}")
    if d_max < J + 1:
        raise ParamOutOfRange(f"d_max = {d_max} below the initial depth {J + 1}")
    if n < 0:
        raise ParamOutOfRange(f"N = {n} must be nonnegative")

    pivot = anchor if kind == "N" else r - anchor + 1
    entries: dict[tuple[int, int], TruncatedSeries] = {}
    d0 = J + 1
    for j in range(1, r + 1):
        if j < pivot:
            entries[(j, d0)] = q_power(2 * d0 * j - 1, n) + q_power(2 * d0 * (j - 1), n)
        elif j == pivot:
            entries[(j, d0)] = q_power(2 * d0 * (j - 1), n)
        else:
            entries[(j, d0)] = series_zero(n)

    for d in range(d0, d_max):
        prefix = [series_zero(n)]
        for m in range(1, r + 1):
            prefix.append(prefix[-1] + entries[(m, d)])
        for j in range(1, r + 1):
            step = prefix[r - j + 1].shift(2 * (d + 1) * (j - 1))
            if r - j >= 1:
                step = step + prefix[r - j].shift(2 * (d + 1) * j - 1)
            entries[(j, d + 1)] = step

    return CoeffTable(kind, r, J, anchor, d_max, n, entries)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check, with the witness on failure."""

    check: str
    params: dict[str, object]
    passed: bool
    first_mismatch: Mismatch | None
    truncation: int

    def to_json_dict(self) -> dict:
        mismatch = None
        if self.first_mismatch is not None:
            mismatch = {
                "degree": self.first_mismatch.degree,
                "lhs": str(self.first_mismatch.lhs),
                "rhs": str(self.first_mismatch.rhs),
            }
        return {
            "check": self.check,
            "params": dict(self.params),
            "pass": self.passed,
            "first_mismatch": mismatch,
            "truncation": self.truncation,
        }


def _run_clauses(
    check: str,
    params: dict[str, object],
    n: int,
    clauses: list[tuple[str, TruncatedSeries, TruncatedSeries]],
) -> CheckReport:
    for label, lhs, rhs in clauses:
        ok, mismatch = eq_up_to(lhs, rhs, n)
        if not ok:
            failing = dict(params)
            failing["clause"] = label
            return CheckReport(check, failing, False, mismatch, n)
    return CheckReport(check, params, True, None, n)


def verify_hp_step(r: int, k: int, ell: int, J: int, n: int) -> CheckReport:
    """Check the odd-index recursion step of the quotient-side series.

    Main identity for odd k:
        HP(k, ell) = sum_{j=1}^{ell-1} q^((k+1)j - 1) HP(k+2, r-j+1)
                   + sum_{j=1}^{ell}   q^((k+1)(j-1)) HP(k+2, r-j+1)
    together with its two building blocks: the odd step
    HP(k, ell) = q^k HP(k+1, ell-1) + HP(k+1, ell) (for ell > 1; at ell = 1
    the step degenerates to HP(k, 1) = HP(k+2, plain)) and the even-index
    cascade HP(k+1, ell) = sum_{j=1}^{ell} q^((k+1)(j-1)) HP(k+2, r-j+1).
    """
    if k % 2 == 0 or k < 2 * J + 1:
        raise ParamOutOfRange(f"k = {k} must be odd and >= 2J+1 = {2 * J + 1}")
    if not 1 <= ell <= r:
        raise ParamOutOfRange(f"ell = {ell} outside 1..{r}")
    params: dict[str, object] = {"r": r, "k": k, "ell": ell, "J": J, "N": n}

    def hp(kk: int, ll: int | None) -> TruncatedSeries:
        return hp_notation(kk, ll, r, n)

    lhs = hp(k, ell)
    cascade = series_zero(n)
    for j in range(1, ell + 1):
        cascade = cascade + hp(k + 2, r - j + 1).shift((k + 1) * (j - 1))
    rhs = cascade
    for j in range(1, ell):
        rhs = rhs + hp(k + 2, r - j + 1).shift((k + 1) * j - 1)

    clauses = [("full_step", lhs, rhs)]
    if ell == 1:
        clauses.append(("odd_step_degenerate", lhs, hp(k + 2, None)))
    else:
        clauses.append(("odd_step", lhs, hp(k + 1, ell - 1).shift(k) + hp(k + 1, ell)))
    clauses.append(("even_cascade", hp(k + 1, ell), cascade))
    return _run_clauses("hp_step", params, n, clauses)


def verify_hp_expansion(r: int, i: int, J: int, d: int, n: int) -> CheckReport:
    """Check the depth-d expansion of the quotient side over its own family.

    HP(2J+1, i) = sum_{j=1}^{r} N[j, d] * HP(2d+1, r-j+1) through degree n.
    """
    if d < J + 1:
        raise ParamOutOfRange(f"d = {d} below the initial depth {J + 1}")
    params: dict[str, object] = {"r": r, "i": i, "J": J, "d": d, "N": n}
    table = coeff_table("N", r, J, i, d, n)
    lhs = hp_notation(2 * J + 1, i, r, n)
    rhs = series_zero(n)
    for j in range(1, r + 1):
        rhs = rhs + table.entry(j, d) * hp_notation(2 * d + 1, r - j + 1, r, n)
    return _run_clauses("hp_expansion", params, n, [("expansion", lhs, rhs)])


def verify_c_expansion(r: int, ell: int, J: int, d: int, n: int) -> CheckReport:
    """Check the depth-d expansion of the product side over higher indices.

    C[(r-1)J + ell] = sum_{j=1}^{r} M[j, d] * C[(r-1)d + j] through degree n.
    """
    if d < J + 1:
        raise ParamOutOfRange(f"d = {d} below the initial depth {J + 1}")
    if not 1 <= ell <= r:
        raise ParamOutOfRange(f"ell = {ell} outside 1..{r}")
    params: dict[str, object] = {"r": r, "ell": ell, "J": J, "d": d, "N": n}
    table = coeff_table("M", r, J, ell, d, n)
    lhs = c_series(r, (r - 1) * J + ell, n)
    rhs = series_zero(n)
    for j in range(1, r + 1):
        rhs = rhs + table.entry(j, d) * c_series(r, (r - 1) * d + j, n)
    return _run_clauses("c_expansion", params, n, [("expansion", lhs, rhs)])


def verify_mn_tables(r: int, i: int, J: int, d_max: int, n: int) -> CheckReport:
    """Check entrywise equality of the M and N tables under ell = r - i + 1."""
    ell = r - i + 1
    params: dict[str, object] = {"r": r, "i": i, "ell": ell, "J": J, "d_max": d_max, "N": n}
    m_table = coeff_table("M", r, J, ell, d_max, n)
    n_table = coeff_table("N", r, J, i, d_max, n)
    clauses = [
        (f"entry[j={j},d={d}]", m_table.entry(j, d), n_table.entry(j, d))
        for d in range(J + 1, d_max + 1)
        for j in range(1, r + 1)
    ]
    return _run_clauses("mn_tables", params, n, clauses)


def stop_depth(n: int, J: int = 0) -> int:
    """Smallest depth whose expansion is exact through degree n.

    d_stop is the first d with 2(d+1) > n; the entries consumed by the
    depth-d expansion sit one level deeper, and at depth d_stop + 1 every
    entry with j >= 2 has valuation at least 2(d_stop + 1) > n.
    """
    return max(n // 2, J)


def verify_limits(r: int, i: int, J: int, n: int) -> CheckReport:
    """Finite shadow of the q-adic limit argument behind the main identity.

    With d_stop the smallest d such that 2(d+1) > n and D = d_stop + 1 the
    depth of the entries consumed at that stage: (a) every table entry with
    j >= 2 at depth D vanishes identically through degree n; (b) both tail
    series, the quotient side at start index 2*d_stop + 3 and the product
    side at index (r-1)(d_stop+1) + 1, equal 1 through degree n; (c) the
    stabilized j = 1 entries at depth D reproduce the product side at index
    (r-1)J + ell and the quotient side anchored at i.
    """
    params_check = IdentityParams(r, i, J, n)
    ell = params_check.ell
    d_stop = stop_depth(n, J)
    depth = d_stop + 1
    params: dict[str, object] = {
        "r": r, "i": i, "ell": ell, "J": J, "N": n, "d_stop": d_stop, "depth": depth,
    }
    m_table = coeff_table("M", r, J, ell, depth, n)
    n_table = coeff_table("N", r, J, i, depth, n)
    zero = series_zero(n)
    one = series_one(n)

    clauses: list[tuple[str, TruncatedSeries, TruncatedSeries]] = []
    for m in range(2, r + 1):
        clauses.append((f"m_entry_vanishes[j={m}]", m_table.entry(m, depth), zero))
        clauses.append((f"n_entry_vanishes[j={m}]", n_table.entry(m, depth), zero))
    clauses.append(("hp_tail_is_one", hp_notation(2 * d_stop + 3, None, r, n), one))
    clauses.append(("product_tail_is_one", c_series(r, (r - 1) * (d_stop + 1) + 1, n), one))
    clauses.append(
        ("m_stabilizes_to_product", m_table.entry(1, depth), c_series(r, (r - 1) * J + ell, n))
    )
    clauses.append(
        ("n_stabilizes_to_quotient", n_table.entry(1, depth), hp_notation(2 * J + 1, i, r, n))
    )
    return _run_clauses("limits", params, n, clauses)


def verify_main(r: int, i: int, J: int, n: int) -> CheckReport:
    """Three-way equality of product side, quotient side, and gap side.

    All three series agree through degree n; at J = 0 the congruence counts
    are additionally compared against the level-zero gap counts degree by
    degree.
    """
    params_check = IdentityParams(r, i, J, n)
    ell = params_check.ell
    params: dict[str, object] = {"r": r, "i": i, "ell": ell, "J": J, "N": n}
    product_side = c_series(r, (r - 1) * J + ell, n)
    quotient_side = hp_notation(2 * J + 1, i, r, n)
    gap_side = series_E(r, i, J, n)
    clauses = [
        ("product_vs_gap", product_side, gap_side),
        ("quotient_vs_gap", quotient_side, gap_side),
        ("product_vs_quotient", product_side, quotient_side),
    ]
    if J == 0:
        congruence = TruncatedSeries(tuple(count_C(params_check, m) for m in range(n + 1)))
        level_zero = TruncatedSeries(tuple(count_D(r, i, m) for m in range(n + 1)))
        clauses.append(("congruence_vs_gap_counts", congruence, level_zero))
    return _run_clauses("main", params, n, clauses)
