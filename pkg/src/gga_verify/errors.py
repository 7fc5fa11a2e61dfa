"""Exception types shared across the package."""

from __future__ import annotations


class NonDivisible(ArithmeticError):
    """Exact division by a power of q hit a nonzero low-order coefficient.

    On correct inputs the numerators of the product-side recursion are
    divisible by the required q-powers, so this always signals a
    transcription error upstream, never an expected condition.
    """


class InvalidPart(ValueError):
    """A partition part size of zero or below was supplied."""


class TruncationTooShort(ValueError):
    """A coefficient beyond the certified truncation range was requested."""


class IndexOutOfRange(ValueError):
    """A congruence-family index outside 1..r was supplied."""


class ParamOutOfRange(ValueError):
    """A parameter bundle violates r >= 2, 1 <= i <= r, J >= 0 or N >= 0."""


class DegreeBeyondTruncation(ValueError):
    """A graded dimension beyond the ideal's truncation degree was requested."""
