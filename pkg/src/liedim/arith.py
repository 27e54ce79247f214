"""Exact integer and rational helpers shared by the dimension computations.

Everything in this package is computed in arbitrary-precision integers or
`fractions.Fraction` values (always in lowest terms, positive denominator),
so results are exact by construction.  Floats appear only at the reporting
layer, and only as renderings of exact rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple


class ExactnessError(ArithmeticError):
    """An operation that must be exact was not.

    Raised when a division leaves a remainder or a checked subtraction goes
    negative.  Either event means a recurrence identity failed, i.e. a bug,
    never bad user input.
    """


def exact_div(a: int, b: int) -> int:
    """Divide a by b, insisting on a zero remainder."""
    q, rem = divmod(a, b)
    if rem:
        raise ExactnessError(f"{a} is not divisible by {b}")
    return q


def checked_sub(a: int, b: int) -> int:
    """Subtract b from a, insisting on a non-negative result."""
    if b > a:
        raise ExactnessError(f"{a} - {b} would be negative")
    return a - b


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test.

    The primes handled here are tiny (they index recurrences), so trial
    division is both sufficient and free of probabilistic caveats.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def divisors(r: int) -> list[int]:
    """All positive divisors of r in ascending order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if r < 1:
        raise ValueError("divisors() needs r >= 1")
    small: list[int] = []
    large: list[int] = []
    f = 1
    while f * f <= r:
        if r % f == 0:
            small.append(f)
            if f != r // f:
                large.append(r // f)
        f += 1
    large.reverse()
    return small + large


def mobius(d: int) -> int:
    """Mobius function: 0 if d has a squared prime factor, else (-1)^(number of prime factors).

    >>> [mobius(d) for d in (1, 2, 4, 6, 30)]
    [1, -1, 0, 1, -1]
    """
    if d < 1:
        raise ValueError("mobius() needs d >= 1")
    result = 1
    f = 2
    while f * f <= d:
        if d % f == 0:
            d //= f
            if d % f == 0:
                return 0
            result = -result
        f += 1
    if d > 1:
        result = -result
    return result


def factorial(r: int) -> int:
    """r!, delegated to math.factorial."""
    if r < 0:
        raise ValueError("factorial() needs r >= 0")
    return math.factorial(r)


class PAdicSplit(NamedTuple):
    """A degree r written as p**m * k with p not dividing k."""

    p: int
    m: int
    k: int

    @property
    def r(self) -> int:
        return self.p**self.m * self.k


def p_adic_split(r: int, p: int) -> PAdicSplit:
    """Split r as p**m * k with m maximal, so p does not divide k.

    >>> p_adic_split(12, 2)
    PAdicSplit(p=2, m=2, k=3)
    """
    if r < 1:
        raise ValueError("p_adic_split() needs r >= 1")
    if not is_prime(p):
        raise ValueError(f"p_adic_split() needs a prime p, got {p}")
    m = 0
    k = r
    while k % p == 0:
        k //= p
        m += 1
    return PAdicSplit(p, m, k)


class BoundCheck(NamedTuple):
    """Result of an exact inequality check: lhs <= rhs."""

    lhs: Fraction
    rhs: Fraction
    holds: bool


class IdentityCheck(NamedTuple):
    """Result of an exact equality check between two independently computed sides."""

    lhs: object
    rhs: object
    holds: bool
