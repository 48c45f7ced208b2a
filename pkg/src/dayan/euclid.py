"""Extended Euclidean inverse under the least-nonnegative remainder rule.

Kept deliberately separate from the state-matrix route so the two stay
independent cross-checks of each other.  The accumulator update mirrors the
classic formulation (swap through a temporary, one division per iteration);
the sign of the answer is fixed afterwards from the iteration count, and a
negative result is shifted by the modulus into [1, m).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import div_least_nonnegative, gcd
from .errors import NotInvertibleError


@dataclass(frozen=True, slots=True)
class EuclidRun:
    """Outcome of one inverse computation.

    ``raw`` is the signed value (-1)**(n+1) * x12 before normalization; it
    lies in (-m, m) and is never 0.  ``normalized`` is raw shifted into
    [1, m), so normalized * a = 1 (mod m).  ``iterations`` may be odd or
    even -- unlike the state-matrix route, nothing constrains its parity.
    """

    raw: int
    normalized: int
    iterations: int


def euclid_inverse(a: int, m: int) -> EuclidRun:
    """Compute a^-1 mod m; a is reduced into [1, m) first.

    Raises NotInvertibleError (carrying the gcd) when no inverse exists.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    g = gcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(a, m, g)
    a = a % m
    x11, x12, x21, x22 = 1, 0, 0, 1
    n = 0
    mm = m
    while a != 0:
        q, r = div_least_nonnegative(mm, a)
        x11, x12 = q * x11 + x12, x11
        x21, x22 = q * x21 + x22, x21
        mm, a = a, r
        n += 1
    raw = x12 if n % 2 else -x12
    return EuclidRun(raw, raw if raw > 0 else raw + m, n)
