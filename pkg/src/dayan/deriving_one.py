"""The deriving-one iteration: modular inverses from a 2x2 state matrix.

The working state is four cells

    x11  x12
    x21  x22

initialised to ((1, a), (0, m)).  Each step divides the larger of x12/x22 by
the smaller under the least-positive remainder rule and folds the quotient
into the same-row left cell: an "upper" step rewrites x21 <- q*x11 + x21 and
x22 <- r, a "lower" step rewrites x11 <- q*x21 + x11 and x12 <- r.  Because
the remainder never reaches 0, the top-right cell eventually lands exactly on
1 (always after an even number of steps), and the top-left cell then holds
a^-1 mod m.

The permanent of the state, x11*x22 + x12*x21, stays equal to m for the whole
run.  Every step re-checks it, which makes a corrupted computation fail loudly
instead of returning garbage.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .arith import div_least_positive, gcd
from .errors import ContractViolationError, NotInvertibleError

UPPER = "upper"  # divided x22, rewrote the bottom row
LOWER = "lower"  # divided x12, rewrote the top row


@dataclass(frozen=True, slots=True)
class StateMatrix:
    """The four working cells (x11 top-left, x22 bottom-right)."""

    x11: int
    x12: int
    x21: int
    x22: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.x11, self.x12, self.x21, self.x22)


def permanent(s: StateMatrix) -> int:
    """x11*x22 + x12*x21 -- the quantity a run conserves at the modulus."""
    return s.x11 * s.x22 + s.x12 * s.x21


@dataclass(frozen=True, slots=True)
class DayanStep:
    """One division step of a run.

    ``index`` is 1-based; inverse runs take upper steps at odd indices and
    lower steps at even indices.  ``remainder`` is always >= 1.
    """

    index: int
    branch: str
    quotient: int
    remainder: int
    state_after: StateMatrix


@dataclass(frozen=True, slots=True)
class DayanTrace:
    """Full record of a run: every step plus the multiplier it produced.

    ``multiplicand`` is the inverted value already reduced into [1, modulus).
    For inverse runs the step count is even and the final state has x12 = 1.
    """

    modulus: int
    multiplicand: int
    steps: tuple[DayanStep, ...]
    result: int

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[DayanStep]:
        return iter(self.steps)

    def to_json_dict(self) -> dict:
        """The documented JSON shape; every big integer as a decimal string."""
        return {
            "a": str(self.multiplicand),
            "m": str(self.modulus),
            "u": str(self.result),
            "steps": [
                {
                    "i": s.index,
                    "branch": s.branch,
                    "q": str(s.quotient),
                    "r": str(s.remainder),
                    "state": [str(c) for c in s.state_after.as_tuple()],
                }
                for s in self.steps
            ],
        }


@dataclass(frozen=True, slots=True)
class BezoutCertificate:
    """Integers with u*a + v*m = d, where d = gcd(a, m) and u, d >= 0."""

    u: int
    v: int
    d: int


def _run(a: int, m: int, keep_running: Callable[[int, int], bool]) -> tuple[int, list[DayanStep]]:
    """Drive the two-branch loop from state ((1, a), (0, m)) until
    keep_running(x12, x22) turns false; returns (final x11, steps)."""
    x11, x12, x21, x22 = 1, a, 0, m
    steps: list[DayanStep] = []
    index = 0
    while keep_running(x12, x22):
        if x22 > x12:
            q, r = div_least_positive(x22, x12)
            x21, x22 = q * x11 + x21, r
            index += 1
            state = StateMatrix(x11, x12, x21, x22)
            if permanent(state) != m:
                raise ContractViolationError(f"permanent != {m} after step {index}")
            steps.append(DayanStep(index, UPPER, q, r, state))
        if x12 > x22:
            q, r = div_least_positive(x12, x22)
            x11, x12 = q * x21 + x11, r
            index += 1
            state = StateMatrix(x11, x12, x21, x22)
            if permanent(state) != m:
                raise ContractViolationError(f"permanent != {m} after step {index}")
            steps.append(DayanStep(index, LOWER, q, r, state))
    return x11, steps


def dayan_inverse(a: int, m: int) -> DayanTrace:
    """Compute a^-1 mod m with the full step record.

    a may be any integer coprime to m; it is reduced into [1, m) first, and
    a reduced value of 1 returns immediately with an empty trace.  Raises
    NotInvertibleError (carrying the gcd) when a and m share a factor.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    g = gcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(a, m, g)
    a0 = a % m
    u, steps = _run(a0, m, lambda x12, x22: x12 > 1)
    return DayanTrace(m, a0, tuple(steps), u)


def dayan_gcd(a: int, m: int) -> tuple[BezoutCertificate, DayanTrace]:
    """Run the same iteration with the stop condition x12 == x22.

    At termination both comparison cells equal d = gcd(a, m) and the final
    x11 is the least u >= 1 with u*a = d (mod m).  Returns the certificate
    (u, v, d) with u*a + v*m = d exactly, plus the trace.  a is reduced into
    [1, m) first; a multiple of m is a domain error.
    """
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    a0 = a % m
    if a0 == 0:
        raise ValueError(f"{a} is a multiple of the modulus {m}")
    u, steps = _run(a0, m, lambda x12, x22: x12 != x22)
    d = steps[-1].state_after.x12  # a0 < m, so the loop ran at least once
    v = bezout_from_result(a0, m, u, d)
    return BezoutCertificate(u, v, d), DayanTrace(m, a0, tuple(steps), u)


def bezout_from_result(a: int, m: int, u: int, d: int) -> int:
    """Back out v = -(u*a - d)/m, the cofactor with u*a + v*m = d.

    Requires u*a = d (mod m); anything else is reported as a contract
    violation since it can only come from a bad caller or a bad run.
    """
    over = u * a - d
    q, r = divmod(over, m)
    if r:
        raise ContractViolationError(f"u*a - d = {over} is not divisible by m = {m}")
    return -q
