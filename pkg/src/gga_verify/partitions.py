"""Partition enumeration and the three counting families of the identities.

Three families of partitions of n are counted here:

* congruence side: parts restricted to residue classes determined by (r, i);
* gap side at level zero: no odd part repeated, parts r-1 positions apart
  differ by at least 2 (odd upper part) or 3 (even upper part), and at most
  i-1 parts equal to 1 or 2;
* generalized gap side: same difference conditions, all parts greater than
  2J, and at most i-1 parts equal to 2J+1 or 2J+2.

Exhaustive enumeration is the ground truth on the gap side; the congruence
side is a plain product expansion.  The two are computed by unrelated code
paths on purpose, so that agreement is evidence rather than tautology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import IndexOutOfRange, ParamOutOfRange
from .qseries import TruncatedSeries, product_geometric_inverses


@dataclass(frozen=True)
class Partition:
    """Non-increasing sequence of positive parts; the empty tuple partitions 0."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = None
        for p in self.parts:
            if p <= 0:
                raise ValueError(f"nonpositive part {p}")
            if prev is not None and p > prev:
                raise ValueError(f"parts not non-increasing: {self.parts}")
            prev = p

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        return sum(1 for p in self.parts if p == value)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)


@dataclass(frozen=True)
class IdentityParams:
    """Validated parameter bundle (r, i, J, N) with ell = r - i + 1 derived."""

    r: int
    i: int
    J: int = 0
    N: int = 0

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ParamOutOfRange(f"r = {self.r} but the identities require r >= 2")
        if not 1 <= self.i <= self.r:
            raise ParamOutOfRange(f"i = {self.i} outside 1..{self.r}")
        if self.J < 0:
            raise ParamOutOfRange(f"J = {self.J} must be nonnegative")
        if self.N < 0:
            raise ParamOutOfRange(f"N = {self.N} must be nonnegative")

    @property
    def ell(self) -> int:
        return self.r - self.i + 1


def enumerate_partitions(n: int, min_part: int = 1) -> Iterator[Partition]:
    """Yield every partition of n with all parts >= min_part exactly once.

    Partitions appear in lexicographically decreasing order of their part
    sequences, e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for n = 4.
    """
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if min_part < 1:
        raise ValueError(f"min_part {min_part} must be >= 1")

    prefix: list[int] = []

    def descend(remaining: int, max_part: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for first in range(min(remaining, max_part), min_part - 1, -1):
            rest = remaining - first
            if rest and rest < min_part:
                continue
            prefix.append(first)
            yield from descend(rest, first)
            prefix.pop()

    return descend(n, n)


def allowed_parts_C(r: int, index: int, n: int) -> list[int]:
    """Part sizes <= n admissible for the congruence-side product of index 1..r.

    A part m is admissible when m is not 2 mod 4, not 0 mod 4r, and not
    congruent to 2r +- (2*index - 1) mod 4r.
    """
    if r < 2:
        raise ParamOutOfRange(f"r = {r} but r >= 2 is required")
    if not 1 <= index <= r:
        raise IndexOutOfRange(f"index {index} outside 1..{r}")
    modulus = 4 * r
    odd = 2 * index - 1
    banned = {0, (2 * r + odd) % modulus, (2 * r - odd) % modulus}
    return [m for m in range(1, n + 1) if m % 4 != 2 and m % modulus not in banned]


def count_C(params: IdentityParams, n: int) -> int:
    """Partitions of n into admissible congruence-side parts (index ell)."""
    if n < 0:
        raise ParamOutOfRange(f"n = {n} must be nonnegative")
    parts = allowed_parts_C(params.r, params.ell, n)
    return product_geometric_inverses(parts, n)[n]


def _gap_conditions_ok(parts: tuple[int, ...], r: int) -> bool:
    """No odd part repeated; entries r-1 apart differ by >= 2 (odd) / 3 (even)."""
    s = len(parts)
    for m in range(s - 1):
        if parts[m] == parts[m + 1] and parts[m] % 2 == 1:
            return False
    for m in range(s - (r - 1)):
        need = 2 if parts[m] % 2 == 1 else 3
        if parts[m] - parts[m + r - 1] < need:
            return False
    return True


def _admissible_D(parts: tuple[int, ...], r: int, i: int) -> bool:
    if not _gap_conditions_ok(parts, r):
        return False
    return sum(1 for p in parts if p <= 2) <= i - 1


def _admissible_E(parts: tuple[int, ...], r: int, i: int, J: int) -> bool:
    if parts and parts[-1] <= 2 * J:
        return False
    if not _gap_conditions_ok(parts, r):
        return False
    return sum(1 for p in parts if p <= 2 * J + 2) <= i - 1


def _check_rijn(r: int, i: int, J: int, n: int) -> None:
    if r < 2:
        raise ParamOutOfRange(f"r = {r} but r >= 2 is required")
    if not 1 <= i <= r:
        raise ParamOutOfRange(f"i = {i} outside 1..{r}")
    if J < 0:
        raise ParamOutOfRange(f"J = {J} must be nonnegative")
    if n < 0:
        raise ParamOutOfRange(f"n = {n} must be nonnegative")


def count_D(r: int, i: int, n: int) -> int:
    """Gap-side count at level zero, by filtered exhaustive enumeration.

    Deliberately the dumb path: generate every partition of n and filter.
    This is the oracle that the pruned counter and the algebra engines are
    measured against.
    """
    _check_rijn(r, i, 0, n)
    return sum(1 for p in enumerate_partitions(n) if _admissible_D(p.parts, r, i))


def count_E(r: int, i: int, J: int, n: int) -> int:
    """Generalized gap-side count, by pruned exhaustive enumeration.

    Parts are generated in non-increasing order with three cuts: the running
    upper bound forced by the difference condition against the part r-1
    positions earlier, a skip on repeating an odd value, and an abort once
    more than i-1 parts of size 2J+1 or 2J+2 have been placed (later parts
    are no larger, so the bound can never recover).
    """
    _check_rijn(r, i, J, n)
    min_part = 2 * J + 1
    boundary_top = 2 * J + 2
    placed: list[int] = []

    def count(remaining: int, budget: int) -> int:
        if remaining == 0:
            return 1
        hi = min(remaining, placed[-1] if placed else remaining)
        t = len(placed)
        if t >= r - 1:
            anchor = placed[t - (r - 1)]
            hi = min(hi, anchor - (2 if anchor % 2 == 1 else 3))
        total = 0
        for v in range(hi, min_part - 1, -1):
            if v % 2 == 1 and placed and placed[-1] == v:
                continue
            rest = remaining - v
            if rest and rest < min_part:
                continue
            b = budget - 1 if v <= boundary_top else budget
            if b < 0:
                break
            placed.append(v)
            total += count(rest, b)
            placed.pop()
        return total

    return count(n, i - 1)


def series_E(r: int, i: int, J: int, n: int) -> TruncatedSeries:
    """Generating series of the generalized gap-side counts through degree n."""
    _check_rijn(r, i, J, n)
    return TruncatedSeries(tuple(count_E(r, i, J, j) for j in range(n + 1)))


def partitions_json(n: int, min_part: int = 1) -> str:
    """Debugging dump: the partition stream as a JSON array of part arrays."""
    stream = enumerate_partitions(n, min_part)
    return json.dumps([list(p.parts) for p in stream], separators=(",", ":"))
