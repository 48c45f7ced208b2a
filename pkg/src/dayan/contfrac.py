"""Continued fractions of proper fractions, and reading them off a trace.

For 0 < a/m < 1 the expansion is written [0; u1, u2, ..., uL] with every
partial quotient >= 1 and, in canonical form, uL >= 2 (so the length L is
well defined).  Convergents alpha_k/beta_k come from the usual three-term
recurrence.

They can also be read straight out of a deriving-one trace without running
the recurrence: after an odd step k the cell x21 is beta_k, after an even
step x11 is beta_k, and in both cases the numerator follows by one exact
division by the modulus.  The correspondence covers k <= L - 1; the run's
final step (when it takes one) uses a quotient one short of uL and so falls
outside it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import div_least_nonnegative
from .deriving_one import DayanTrace
from .errors import ContractViolationError


@dataclass(frozen=True, slots=True)
class ContinuedFraction:
    """Partial quotients u1..uL of [0; u1, ..., uL]."""

    partials: tuple[int, ...]

    def __post_init__(self):
        if not self.partials:
            raise ValueError("at least one partial quotient is required")
        if any(u < 1 for u in self.partials):
            raise ValueError("partial quotients must be >= 1")
        if len(self.partials) > 1 and self.partials[-1] < 2:
            raise ValueError("canonical form needs the final partial quotient >= 2")

    def __len__(self) -> int:
        return len(self.partials)


@dataclass(frozen=True, slots=True)
class Convergent:
    """The k-th approximant alpha/beta = [0; u1, ..., uk]."""

    alpha: int
    beta: int
    k: int


def cf_expand(a: int, m: int) -> ContinuedFraction:
    """Expand a/m, 0 < a < m, by repeated least-nonnegative division.

    The expansion of a reduced fraction ends on a partial quotient >= 2, so
    the result is canonical by construction.
    """
    if a < 1 or a >= m:
        raise ValueError(f"need 0 < a < m, got a = {a}, m = {m}")
    partials = []
    num, den = m, a
    while den:
        q, r = div_least_nonnegative(num, den)
        partials.append(q)
        num, den = den, r
    return ContinuedFraction(tuple(partials))


def convergents(cf: ContinuedFraction) -> tuple[Convergent, ...]:
    """All approximants k = 1..L by the standard recurrence.

    beta_k = uk * beta_{k-1} + beta_{k-2} with beta_0 = 1, beta_{-1} = 0,
    and the same recurrence for alpha seeded with alpha_0 = 0, alpha_{-1} = 1
    (the leading 0 term of the fraction).  The last convergent reproduces the
    expanded fraction in lowest terms.
    """
    out = []
    a_prev, a_cur = 1, 0
    b_prev, b_cur = 0, 1
    for k, u in enumerate(cf.partials, 1):
        a_prev, a_cur = a_cur, u * a_cur + a_prev
        b_prev, b_cur = b_cur, u * b_cur + b_prev
        out.append(Convergent(a_cur, b_cur, k))
    return tuple(out)


def convergents_from_trace(trace: DayanTrace) -> tuple[Convergent, ...]:
    """Read the approximants of multiplicand/modulus off an inverse trace.

    Step k supplies beta_k from x21 (odd k) or x11 (even k); alpha_k is
    (x21*a + x22)/m resp. (x11*a - x12)/m, both exactly divisible.  A trace
    ends either on the step producing beta_{L-1} or one step later (the runs
    whose last division is by a cell already equal to 1); in the second case
    the final step is skipped, so the output is always k = 1..L-1.  The empty
    trace of a trivially reduced input yields an empty sequence.

    An inexact division raises ContractViolationError: it means the trace was
    not produced by an inverse run over the recorded pair.
    """
    steps = trace.steps
    if steps and steps[-1].state_after.x22 == 1:
        steps = steps[:-1]
    a, m = trace.multiplicand, trace.modulus
    out = []
    for step in steps:
        s = step.state_after
        if step.index % 2:
            beta = s.x21
            num = s.x21 * a + s.x22
        else:
            beta = s.x11
            num = s.x11 * a - s.x12
        alpha, rem = divmod(num, m)
        if rem:
            raise ContractViolationError(
                f"numerator at step {step.index} is not divisible by the modulus"
            )
        out.append(Convergent(alpha, beta, step.index))
    return tuple(out)
