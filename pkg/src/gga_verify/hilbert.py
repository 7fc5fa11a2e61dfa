"""Graded quotients by the boundary/gap ideal families and their series.

Two independent engines compute the Hilbert-Poincare series of a quotient by
a monomial ideal, truncated at degree N:

* hp_brute counts standard monomials degree by degree (the oracle);
* hp_split recurses on the splitting identity
      HP(A/I) = q^w * HP(A/(I : f)) + HP(A/(I, f))
  for a pivot variable f = x_k of weight w = k.

The ideal families encode the gap conditions of the partition identities:
squares of odd variables, odd-even neighbor products, and two staircase
families on consecutive even variables, all anchored at a starting index,
plus three boundary generators controlling the smallest two variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParamOutOfRange
from .monomial import Monomial, MonomialIdeal, add_var, colon_var, standard_count
from .qseries import TruncatedSeries, product_geometric_inverses


@dataclass(frozen=True)
class GradedQuotient:
    """Quotient of the ring on x_{min_var}, x_{min_var+1}, ... by a monomial ideal."""

    ideal: MonomialIdeal

    @property
    def min_var(self) -> int:
        return self.ideal.min_var

    @property
    def trunc(self) -> int:
        return self.ideal.trunc


def _x(var: int, exp: int = 1) -> Monomial:
    return Monomial.make({var: exp})


def _gap_family_gens(start: int, r: int, n: int) -> list[Monomial]:
    """Generators with all base indices >= start, weight-truncated at n.

    Four families: x_odd^2; x_odd * x_{odd+1}^{r-1}; x_even^{r-n1} * x_{even+2}^{n1}
    for 0 <= n1 <= r-1; x_even^{r-n2-1} * x_{even+1} * x_{even+2}^{n2} for
    0 <= n2 <= r-2.  Base indices above n are useless: any such generator
    already weighs more than n.
    """
    gens: list[Monomial] = []
    for odd in range(start + (start % 2 == 0), n + 1, 2):
        gens.append(_x(odd, 2))
        gens.append(Monomial.make({odd: 1, odd + 1: r - 1}))
    for even in range(start + (start % 2 == 1), n + 1, 2):
        for n1 in range(r):
            gens.append(Monomial.make({even: r - n1, even + 2: n1}))
        for n2 in range(r - 1):
            gens.append(Monomial.make({even: r - n2 - 1, even + 1: 1, even + 2: n2}))
    return [g for g in gens if g.weight <= n]


def _check_r(r: int) -> None:
    if r < 2:
        raise ParamOutOfRange(f"r = {r} but r >= 2 is required")


def build_L_riJ(r: int, i: int, J: int, n: int) -> MonomialIdeal:
    """Boundary ideal in the ring on x_{2J+1}, x_{2J+2}, ...

    Generators: x_{2J+1}^2, x_{2J+1} * x_{2J+2}^{i-1}, x_{2J+2}^i, plus the
    gap families anchored at 2J+2.  At i = 1 the middle generator degenerates
    to x_{2J+1}, which then subsumes the square.
    """
    _check_r(r)
    if not 1 <= i <= r:
        raise ParamOutOfRange(f"i = {i} outside 1..{r}")
    if J < 0:
        raise ParamOutOfRange(f"J = {J} must be nonnegative")
    k0 = 2 * J + 1
    gens = [
        _x(k0, 2),
        Monomial.make({k0: 1, k0 + 1: i - 1}),
        _x(k0 + 1, i),
    ]
    gens += _gap_family_gens(k0 + 1, r, n)
    return MonomialIdeal.build(gens, k0, n)


def build_L_k(k: int, r: int, n: int) -> MonomialIdeal:
    """Pure gap-family ideal anchored at k, in the ring on x_k, x_{k+1}, ..."""
    _check_r(r)
    if k < 1:
        raise ParamOutOfRange(f"k = {k} must be >= 1")
    return MonomialIdeal.build(_gap_family_gens(k, r, n), k, n)


def build_L_k_ell(k: int, ell: int, r: int, n: int) -> MonomialIdeal:
    """Interpolating ideal between consecutive gap-family ideals.

    For odd k: (x_k^2, x_k * x_{k+1}^{ell-1}) plus the even-index step below
    at k+1.  For even k: x_k^ell, the staircase x_k^{ell-j} * x_{k+2}^{r-ell+j}
    for 1 <= j <= ell-1, the staircase x_k^{ell-1-j} * x_{k+1} * x_{k+2}^{r-ell+j}
    for 0 <= j <= ell-2, plus the plain family ideal at k+1.  Empty staircase
    ranges contribute nothing, so ell = 1 at even k is just (x_k) plus the
    family ideal.
    """
    _check_r(r)
    if not 1 <= ell <= r:
        raise ParamOutOfRange(f"ell = {ell} outside 1..{r}")
    if k < 1:
        raise ParamOutOfRange(f"k = {k} must be >= 1")
    gens: list[Monomial] = []
    j = k
    if j % 2 == 1:
        gens.append(_x(j, 2))
        gens.append(Monomial.make({j: 1, j + 1: ell - 1}))
        j += 1
    if j <= n:
        gens.append(_x(j, ell))
        for step in range(1, ell):
            gens.append(Monomial.make({j: ell - step, j + 2: r - ell + step}))
        for step in range(ell - 1):
            gens.append(Monomial.make({j: ell - 1 - step, j + 1: 1, j + 2: r - ell + step}))
        gens += _gap_family_gens(j + 1, r, n)
    return MonomialIdeal.build(gens, k, n)


def hp_brute(quotient: GradedQuotient) -> TruncatedSeries:
    """Hilbert-Poincare series by direct standard-monomial counting."""
    ideal = quotient.ideal
    return TruncatedSeries(
        tuple(standard_count(ideal, j) for j in range(quotient.trunc + 1))
    )


def _pivot_var(gens: tuple[Monomial, ...]) -> int | None:
    """Smallest variable occurring in a generator that is not a single variable.

    Single-variable generators only mark killed variables: splitting on one
    of them is a fixed point of the (I, f) branch and must be excluded for
    the recursion to terminate.  By minimality a killed variable occurs in no
    other generator, so the pivot never collides with one.
    """
    best: int | None = None
    for g in gens:
        if g.degree >= 2:
            v = g.exps[0][0]
            if best is None or v < best:
                best = v
    return best


def hp_split(quotient: GradedQuotient) -> TruncatedSeries:
    """Hilbert-Poincare series by the colon/add splitting recursion.

    Each step picks the pivot x_k with k the smallest variable index in any
    non-simple minimal generator and splits the quotient along it.  The
    recursion terminates because both branches strictly shrink the total
    degree of non-simple generators: the colon branch lowers the pivot's
    exponent in at least one of them, and the add branch absorbs every
    generator that contains the pivot.  The shift budget is bounded by the
    truncation, so colon chains are pruned once their accumulated weight
    exceeds the degrees still being certified.  Results are memoized on the
    canonical generator set plus the remaining budget.
    """
    min_var = quotient.min_var
    memo: dict[tuple[tuple[Monomial, ...], int], tuple[int, ...]] = {}

    def solve(ideal: MonomialIdeal, budget: int) -> tuple[int, ...]:
        if ideal.is_unit:
            return (0,) * (budget + 1)
        pivot = _pivot_var(ideal.gens)
        if pivot is None:
            killed = {g.min_variable() for g in ideal.gens}
            parts = [v for v in range(min_var, budget + 1) if v not in killed]
            return product_geometric_inverses(parts, budget).coeffs
        key = (ideal.gens, budget)
        cached = memo.get(key)
        if cached is not None:
            return cached
        added = add_var(ideal, pivot)
        out = list(solve(MonomialIdeal.build(added.gens, min_var, budget), budget))
        sub_budget = budget - pivot
        if sub_budget >= 0:
            col = colon_var(ideal, pivot)
            low = solve(MonomialIdeal.build(col.gens, min_var, sub_budget), sub_budget)
            for j, c in enumerate(low):
                out[j + pivot] += c
        result = tuple(out)
        memo[key] = result
        return result

    n = quotient.trunc
    ideal = MonomialIdeal.build(quotient.ideal.gens, min_var, n)
    return TruncatedSeries(solve(ideal, n))


@lru_cache(maxsize=None)
def _hp_notation_cached(k: int, ell: int | None, r: int, n: int) -> TruncatedSeries:
    if ell is None:
        ideal = build_L_k(k, r, n)
    else:
        ideal = build_L_k_ell(k, ell, r, n)
    return hp_split(GradedQuotient(ideal))


def hp_notation(k: int, ell: int | None, r: int, n: int) -> TruncatedSeries:
    """Series of the quotient by the family ideal at k (plain when ell is None).

    The cache is safe to share: inputs fully determine the immutable result.
    """
    _check_r(r)
    if ell is not None and not 1 <= ell <= r:
        raise ParamOutOfRange(f"ell = {ell} outside 1..{r}")
    if k < 1 or n < 0:
        raise ParamOutOfRange(f"k = {k}, N = {n} must be positive / nonnegative")
    return _hp_notation_cached(k, ell, r, n)
