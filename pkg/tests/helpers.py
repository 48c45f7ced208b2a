"""Oracles and fixtures shared by the test modules.

Everything here is deliberately independent of the library's own algorithms:
brute-force scans, textbook Miller-Rabin, and key construction via the
built-in pow(d, -1, phi).
"""

from math import gcd as _gcd
from random import Random

# Deterministic Miller-Rabin witnesses for n < 3.3e24 (covers 128-bit N).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def brute_force_inverse(a: int, m: int) -> int:
    """Smallest u in [1, m) with u*a = 1 (mod m), by incremental scan."""
    a %= m
    u, prod = 1, a
    while prod != 1:
        prod += a
        if prod >= m:
            prod -= m
        u += 1
    return u


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def gen_prime(rng: Random, bits: int) -> int:
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand):
            return cand


def isqrt_oracle(n: int) -> int:
    """Bit-by-bit floor square root, no math.isqrt."""
    if n < 0:
        raise ValueError
    r = 0
    for shift in range((n.bit_length() + 1) // 2 - 1, -1, -1):
        cand = r | (1 << shift)
        if cand * cand <= n:
            r = cand
    return r


def make_vulnerable_key(rng: Random, bits: int) -> tuple[int, int, int, int, int, int]:
    """(n, e, d, p, q, phi) with balanced primes of ``bits`` bits and a prime
    d below n^(1/4)/3, so the recovery is guaranteed to succeed."""
    while True:
        p = gen_prime(rng, bits)
        q = gen_prime(rng, bits)
        if p == q:
            continue
        if p < q:
            p, q = q, p
        n = p * q
        phi = (p - 1) * (q - 1)
        bound = isqrt_oracle(isqrt_oracle(n)) // 3
        if bound < 3:
            continue
        d = 0
        for _ in range(200):
            cand = rng.randrange(3, bound + 1)
            if is_probable_prime(cand) and _gcd(cand, phi) == 1:
                d = cand
                break
        if not d:
            continue
        e = pow(d, -1, phi)
        if e <= 1 or _gcd(e, n) != 1:
            continue
        return n, e, d, p, q, phi


def make_large_d_key(rng: Random, bits: int) -> tuple[int, int, int]:
    """(n, e, d) with d around phi/2, far outside the recoverable range."""
    while True:
        p = gen_prime(rng, bits)
        q = gen_prime(rng, bits)
        if p == q:
            continue
        n = p * q
        phi = (p - 1) * (q - 1)
        d = rng.randrange(phi // 3, 2 * phi // 3)
        if _gcd(d, phi) != 1:
            continue
        e = pow(d, -1, phi)
        if e <= 1 or _gcd(e, n) != 1:
            continue
        return n, e, d


def crt_brute_force(pairs: list[tuple[int, int]]) -> list[int]:
    """All x in [0, lcm) satisfying every congruence, by exhaustive scan.

    The scan walks the arithmetic progression of the largest modulus, which
    enumerates exactly the x in [0, M) satisfying that one congruence and
    checks the rest directly, so it is equivalent to scanning all of [0, M).
    """
    big_m = 1
    for _, m in pairs:
        big_m = big_m // _gcd(big_m, m) * m
    j = max(range(len(pairs)), key=lambda idx: pairs[idx][1])
    r_j, m_j = pairs[j][0] % pairs[j][1], pairs[j][1]
    hits = []
    for x in range(r_j, big_m, m_j):
        if all(x % m == r % m for r, m in pairs):
            hits.append(x)
    return hits
