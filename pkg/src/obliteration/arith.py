"""Exact integer arithmetic helpers shared across the package.

All quantities in this package are nonnegative Python ints (arbitrary
precision).  Rational expressions in the closed forms are always evaluated
products-first and divided last; a nonzero remainder is a hard failure, never
a rounding.
"""

from __future__ import annotations


class MalformedTypeError(ValueError):
    """A multidegree type violates its invariants (empty, negative, or a
    zero top count where a canonical type is required)."""


class DomainError(ValueError):
    """An argument is outside an operation's stated domain."""


class IntegralityError(ArithmeticError):
    """An expression that must be exactly integral left a remainder.

    This always indicates a transcription bug in a closed form, not bad
    input; it is deliberately not a ValueError.
    """


class SelfCheckError(ArithmeticError):
    """An internal mathematical self-check failed (implementation bug)."""


def exact_div(numerator: int, divisor: int) -> int:
    """Divide exactly, raising IntegralityError on any remainder."""
    q, r = divmod(numerator, divisor)
    if r:
        raise IntegralityError(f"{numerator} is not divisible by {divisor}")
    return q


def ceil_div(numerator: int, divisor: int) -> int:
    """Ceiling of numerator/divisor for positive divisor, exactly."""
    if divisor <= 0:
        raise DomainError("ceil_div needs a positive divisor")
    return -(-numerator // divisor)
