"""Modular inverses by the deriving-one state-matrix method, and what falls
out of its trace: continued-fraction convergents, a Chinese-remainder solver
for non-coprime moduli, and the Wiener small-exponent RSA attack.  A separate
extended-Euclidean route is kept as an independent cross-check throughout.
"""

from .arith import (
    DivStep,
    div_least_nonnegative,
    div_least_positive,
    gcd,
    isqrt,
    lcm,
)
from .contfrac import (
    ContinuedFraction,
    Convergent,
    cf_expand,
    convergents,
    convergents_from_trace,
)
from .crt import (
    CommonFactorError,
    Conflict,
    Congruence,
    CongruenceSystem,
    CoprimeBasis,
    CrtSolution,
    DayanCertificate,
    UnsolvableSystemError,
    check_solvable,
    coprimize,
    multi_bezout,
    solve_bezout,
    solve_dayan,
)
from .deriving_one import (
    LOWER,
    UPPER,
    BezoutCertificate,
    DayanStep,
    DayanTrace,
    StateMatrix,
    bezout_from_result,
    dayan_gcd,
    dayan_inverse,
    permanent,
)
from .errors import ContractViolationError, NotInvertibleError
from .euclid import EuclidRun, euclid_inverse
from .wiener import RsaPublicKey, WienerResult, candidate_check, wiener_attack

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "CommonFactorError",
    "Conflict",
    "Congruence",
    "CongruenceSystem",
    "ContinuedFraction",
    "ContractViolationError",
    "Convergent",
    "CoprimeBasis",
    "CrtSolution",
    "DayanCertificate",
    "DayanStep",
    "DayanTrace",
    "DivStep",
    "EuclidRun",
    "LOWER",
    "NotInvertibleError",
    "RsaPublicKey",
    "StateMatrix",
    "UPPER",
    "UnsolvableSystemError",
    "WienerResult",
    "bezout_from_result",
    "candidate_check",
    "cf_expand",
    "check_solvable",
    "convergents",
    "convergents_from_trace",
    "coprimize",
    "dayan_gcd",
    "dayan_inverse",
    "div_least_nonnegative",
    "div_least_positive",
    "euclid_inverse",
    "gcd",
    "isqrt",
    "lcm",
    "multi_bezout",
    "permanent",
    "solve_bezout",
    "solve_dayan",
    "wiener_attack",
]
