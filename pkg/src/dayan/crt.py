"""Simultaneous congruences with moduli that need not be pairwise coprime.

A system x = r_i (mod m_i) is solvable exactly when every pair of residues
agrees modulo the gcd of its moduli; the solution is then unique modulo
M = lcm(m_1, ..., m_k).  Two independent solvers are provided:

* ``solve_bezout`` combines the cofactors M_i = M/m_i directly, using chained
  extended-gcd coefficients with sum(u_i * M_i) = 1.
* ``solve_dayan`` first refines the moduli into a pairwise-coprime basis
  (a_i | m_i, prod a_i = M) and then weights each congruence by the
  deriving-one multiplier v_i = (M/a_i)^-1 mod a_i.  The multipliers satisfy
  sum(v_i * M/a_i) = 1 + g*M for an exact integer g >= 1, which is returned
  as a checkable certificate ("zhengyong" when g = 1, "fanyong" when g > 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import gcd, lcm
from .deriving_one import dayan_inverse
from .errors import ContractViolationError

ZHENGYONG = "zhengyong"  # certificate with g == 1
FANYONG = "fanyong"  # certificate with g > 1


@dataclass(frozen=True, slots=True)
class Congruence:
    """x = residue (mod modulus); the residue is normalized into [0, modulus)."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)


@dataclass(frozen=True, slots=True)
class CongruenceSystem:
    """A nonempty list of congruences; moduli may share factors."""

    items: tuple[Congruence, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise ValueError("a congruence system must not be empty")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "CongruenceSystem":
        return cls(tuple(Congruence(r, m) for r, m in pairs))

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True, slots=True)
class Conflict:
    """Congruences i and j disagree modulo gcd = gcd(m_i, m_j)."""

    i: int
    j: int
    gcd: int


class UnsolvableSystemError(ValueError):
    """A solver was asked to solve a system that fails the pairwise test."""

    def __init__(self, conflict: Conflict):
        super().__init__(
            f"congruences {conflict.i} and {conflict.j} conflict modulo gcd = {conflict.gcd}"
        )
        self.conflict = conflict


class CommonFactorError(ValueError):
    """The values handed to multi_bezout share a factor, so no combination hits 1."""

    def __init__(self, gcd: int):
        super().__init__(f"values share a common factor: gcd = {gcd}")
        self.gcd = gcd


@dataclass(frozen=True, slots=True)
class CoprimeBasis:
    """Pairwise-coprime factors, one per input modulus, multiplying to the lcm."""

    factors: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CrtSolution:
    """The least solution x0 in [0, modulus), modulus = lcm of the input moduli."""

    x0: int
    modulus: int
    method: str


@dataclass(frozen=True, slots=True)
class DayanCertificate:
    """Multipliers v_i with sum(v_i * M/a_i) = 1 + g*M over the coprime basis."""

    multipliers: tuple[int, ...]
    g: int
    kind: str


def check_solvable(system: CongruenceSystem) -> Conflict | None:
    """None when the system is consistent; otherwise the first offending pair
    (scanning i < j in index order) whose residues differ modulo gcd(m_i, m_j)."""
    items = system.items
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            d = gcd(items[i].modulus, items[j].modulus)
            if (items[i].residue - items[j].residue) % d:
                return Conflict(i, j, d)
    return None


def coprimize(moduli: Sequence[int]) -> CoprimeBasis:
    """Refine moduli into pairwise-coprime factors a_i with a_i | m_i and
    prod(a_i) = lcm(m_1, ..., m_k).

    Entirely gcd-driven, no factoring: for each non-coprime pair the shared
    content migrates to whichever member holds the higher power of it, one
    gcd at a time; prime content present to the same power on both sides is
    handed wholly to the lower-index member.  Sweeps repeat until every pair
    is coprime.
    """
    out = [int(x) for x in moduli]
    if any(x < 1 for x in out):
        raise ValueError("moduli must be >= 1")
    changed = True
    while changed:
        changed = False
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                g = gcd(out[i], out[j])
                if g == 1:
                    continue
                changed = True
                x, y = out[i] // g, out[j] // g
                while (h := gcd(g, x)) > 1:
                    x *= h
                    g //= h
                while (h := gcd(g, y)) > 1:
                    y *= h
                    g //= h
                out[i], out[j] = x * g, y  # tied powers land on the lower index
    return CoprimeBasis(tuple(out))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b), for nonnegative a, b."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def multi_bezout(values: Sequence[int]) -> tuple[int, ...]:
    """Coefficients u_i with sum(u_i * values_i) = 1 exactly.

    Built by chaining two-term extended gcds and back-substituting; the
    coefficients are not unique, only the combination is.  Raises
    CommonFactorError when the overall gcd exceeds 1.
    """
    vals = [int(v) for v in values]
    if not vals:
        raise ValueError("at least one value is required")
    if any(v < 0 for v in vals):
        raise ValueError("values must be nonnegative")
    coeffs = [1]
    g = vals[0]
    for v in vals[1:]:
        g, s, t = _xgcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
    if g != 1:
        raise CommonFactorError(g)
    return tuple(coeffs)


def _lcm_all(moduli: Iterable[int]) -> int:
    out = 1
    for m in moduli:
        out = lcm(out, m)
    return out


def solve_bezout(system: CongruenceSystem) -> CrtSolution:
    """Solve by the direct cofactor combination.

    With M = lcm of the moduli and M_i = M/m_i, the cofactors are globally
    coprime, so sum(u_i * M_i) = 1 has a solution and
    x0 = sum(r_i * u_i * M_i) mod M satisfies every congruence.
    """
    conflict = check_solvable(system)
    if conflict is not None:
        raise UnsolvableSystemError(conflict)
    items = system.items
    big_m = _lcm_all(c.modulus for c in items)
    cofactors = [big_m // c.modulus for c in items]
    coeffs = multi_bezout(cofactors)
    x0 = sum(c.residue * u * mi for c, u, mi in zip(items, coeffs, cofactors)) % big_m
    return CrtSolution(x0, big_m, "bezout")


def solve_dayan(system: CongruenceSystem) -> tuple[CrtSolution, DayanCertificate | None]:
    """Solve over the coprime basis with deriving-one multipliers.

    Residues carry over unreduced (valid because a_i | m_i).  Factors refined
    down to 1 take multiplier 1 and contribute a full M to the certificate
    sum.  For a single congruence the certificate degenerates to g = 0 and
    None is returned in its place.
    """
    conflict = check_solvable(system)
    if conflict is not None:
        raise UnsolvableSystemError(conflict)
    items = system.items
    basis = coprimize([c.modulus for c in items])
    big_m = 1
    for f in basis.factors:
        big_m *= f
    multipliers = tuple(
        1 if f == 1 else dayan_inverse(big_m // f, f).result for f in basis.factors
    )
    total = sum(v * (big_m // f) for v, f in zip(multipliers, basis.factors))
    g, rem = divmod(total - 1, big_m)
    if rem:
        raise ContractViolationError("multiplier sum is not congruent to 1 modulo M")
    x0 = sum(
        c.residue * v * (big_m // f) for c, v, f in zip(items, multipliers, basis.factors)
    ) % big_m
    solution = CrtSolution(x0, big_m, "dayan")
    if g < 1:
        return solution, None
    return solution, DayanCertificate(multipliers, g, ZHENGYONG if g == 1 else FANYONG)
