"""Integer primitives and the two division rules everything else builds on.

Two remainder conventions coexist here on purpose.  The least-positive rule
keeps the remainder in [1, b] (an exact division yields remainder b, not 0);
the least-nonnegative rule is ordinary floor division with remainder in
[0, b).  The state-matrix inverse runs entirely on the first rule, the
reference Euclidean inverse on the second.

Values are plain Python ints, which are arbitrary precision natively; all
functions treat their arguments as unsigned and reject anything outside the
stated domain.
"""

from __future__ import annotations

import math
from typing import NamedTuple


class DivStep(NamedTuple):
    """One division: dividend = quotient * divisor + remainder."""

    quotient: int
    remainder: int


def div_least_positive(a: int, b: int) -> DivStep:
    """Divide a by b with the remainder forced into [1, b].

    The quotient is floor((a - 1) / b), so when b divides a the result is
    (a/b - 1, b) rather than (a/b, 0).  Both arguments must be >= 1.
    """
    if a < 1 or b < 1:
        raise ValueError(f"least-positive division needs a >= 1 and b >= 1, got ({a}, {b})")
    q = (a - 1) // b
    return DivStep(q, a - q * b)


def div_least_nonnegative(a: int, b: int) -> DivStep:
    """Divide a by b with the remainder in [0, b); plain floor division."""
    if b < 1:
        raise ValueError(f"division needs b >= 1, got {b}")
    if a < 0:
        raise ValueError(f"dividend must be nonnegative, got {a}")
    q, r = divmod(a, b)
    return DivStep(q, r)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) is a domain error, not 0."""
    if a < 0 or b < 0:
        raise ValueError(f"gcd takes nonnegative arguments, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers, via a/gcd*b."""
    if a < 1 or b < 1:
        raise ValueError(f"lcm takes positive arguments, got ({a}, {b})")
    return a // math.gcd(a, b) * b


def isqrt(n: int) -> int:
    """Floor of the square root: isqrt(n)**2 <= n < (isqrt(n)+1)**2."""
    return math.isqrt(n)
