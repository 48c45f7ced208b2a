"""Small-private-exponent RSA key recovery from the public key alone.

When d is small enough (roughly d < N^(1/4)/3 for balanced primes), k/d is
one of the approximants of e/N, where e*d = 1 + k*phi(N).  The candidates
are read directly off the deriving-one trace of e mod N, in step order, and
each is validated by attempting to factor N: a candidate phi gives
p + q = N - phi + 1, and p, q must come out as exact positive integer roots
multiplying back to N.  Successes are therefore self-certifying; a key whose
d is large simply exhausts the candidates and reports not found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import gcd, isqrt
from .contfrac import convergents_from_trace
from .deriving_one import dayan_inverse


@dataclass(frozen=True, slots=True)
class RsaPublicKey:
    modulus: int
    exponent: int

    def __post_init__(self):
        if not 1 < self.exponent < self.modulus:
            raise ValueError("need 1 < e < N")


@dataclass(frozen=True, slots=True)
class WienerResult:
    """Outcome of an attack; the recovery fields are None unless found.

    When found: e*d = 1 (mod phi), p*q = N, phi = (p-1)*(q-1), and
    e*d - 1 = k*phi, with ``step`` the trace index whose cell supplied d.
    """

    found: bool
    d: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None
    phi: int | None = None
    step: int | None = None


def candidate_check(n: int, e: int, k: int, d: int) -> tuple[int, int, int] | None:
    """Validate one (k, d) guess against the key; (p, q, phi) or None.

    The guess survives only if (e*d - 1)/k is an integer phi for which
    x^2 - (N - phi + 1)x + N has two positive integer roots multiplying to N.
    """
    if k == 0:
        return None
    over = e * d - 1
    if over % k:
        return None
    phi = over // k
    s = n - phi + 1
    disc = s * s - 4 * n
    if disc < 0:
        return None
    root = isqrt(disc)
    if root * root != disc:
        return None
    if (s + root) % 2:
        return None
    p, q = (s - root) // 2, (s + root) // 2
    if p <= 0 or p * q != n:
        return None
    return p, q, phi


def wiener_attack(key: RsaPublicKey) -> WienerResult:
    """Try every trace-derived approximant of e/N in step order.

    Returns the first validated candidate, or found=False when none factors
    the modulus.  gcd(e, N) > 1 is a domain error (the gcd already factors N,
    and it is reported in the message).
    """
    n, e = key.modulus, key.exponent
    g = gcd(e, n)
    if g != 1:
        raise ValueError(f"e and N share a factor: gcd = {g} already factors N")
    trace = dayan_inverse(e, n)
    for conv in convergents_from_trace(trace):
        hit = candidate_check(n, e, conv.alpha, conv.beta)
        if hit is not None:
            p, q, phi = hit
            return WienerResult(True, conv.beta, conv.alpha, p, q, phi, conv.k)
    return WienerResult(False)
