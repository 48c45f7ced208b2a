"""Command-line front end exposing every operation, plus a benchmark.

Numbers on the command line are decimal by default or hex with a 0x prefix;
whitespace (including newlines) embedded in a quoted digit block is ignored,
so values copied out of key listings paste straight in.  ``--json`` switches
any subcommand to a stable machine-readable schema in which every big integer
is a decimal string (never a JSON number, which would silently lose precision
past 53 bits).

Exit codes: 0 on success, 1 with a one-line diagnostic on domain errors
(non-invertible input, unsolvable system, parse failure), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import dataclass
from random import Random
from typing import Sequence

from .arith import gcd
from .contfrac import cf_expand, convergents
from .crt import CongruenceSystem, UnsolvableSystemError, coprimize, solve_bezout, solve_dayan
from .deriving_one import dayan_gcd, dayan_inverse
from .errors import ContractViolationError, NotInvertibleError
from .euclid import euclid_inverse
from .wiener import RsaPublicKey, wiener_attack


class ParseFailure(ValueError):
    pass


def parse_number(text: str) -> int:
    """Decimal or 0x-prefixed hex, with any embedded whitespace stripped."""
    s = "".join(text.split())
    try:
        if s[:2].lower() == "0x" or s[:3].lower() == "-0x":
            return int(s, 16)
        return int(s, 10)
    except ValueError:
        raise ParseFailure(f"not a number: {text!r}") from None


def _emit(args, payload: dict, plain: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(plain)


# ---------------------------------------------------------------- inv / gcd


def cmd_inv(args) -> int:
    a, m = parse_number(args.a), parse_number(args.m)
    if args.algo == "dayan":
        trace = dayan_inverse(a, m)
        _emit(args, {"a": str(a), "m": str(m), "algo": "dayan", "u": str(trace.result)},
              str(trace.result))
    else:
        run = euclid_inverse(a, m)
        payload = {"a": str(a), "m": str(m), "algo": "euclid", "u": str(run.normalized),
                   "raw": str(run.raw), "iterations": run.iterations}
        _emit(args, payload, str(run.raw if args.raw else run.normalized))
    return 0


def cmd_gcd(args) -> int:
    a, m = parse_number(args.a), parse_number(args.m)
    cert, _trace = dayan_gcd(a, m)
    payload = {"a": str(a), "m": str(m), "d": str(cert.d), "u": str(cert.u), "v": str(cert.v)}
    _emit(args, payload, f"d = {cert.d}\nu = {cert.u}\nv = {cert.v}")
    return 0


# ---------------------------------------------------------------- trace / cf


def cmd_trace(args) -> int:
    a, m = parse_number(args.a), parse_number(args.m)
    trace = dayan_inverse(a, m)
    if args.json:
        print(json.dumps(trace.to_json_dict()))
        return 0
    print(f"a = {trace.multiplicand}  m = {trace.modulus}")
    for s in trace.steps:
        print(f"step {s.index}: {s.branch}  q = {s.quotient}  r = {s.remainder}"
              f"  state = {s.state_after.as_tuple()}")
    print(f"u = {trace.result}")
    return 0


def cmd_cf(args) -> int:
    a, m = parse_number(args.a), parse_number(args.m)
    cf = cf_expand(a, m)
    convs = convergents(cf)
    if args.json:
        print(json.dumps({
            "a": str(a), "m": str(m),
            "partials": [str(u) for u in cf.partials],
            "convergents": [{"k": c.k, "alpha": str(c.alpha), "beta": str(c.beta)}
                            for c in convs],
        }))
        return 0
    print("[0; " + ", ".join(str(u) for u in cf.partials) + "]")
    for c in convs:
        print(f"k = {c.k}: {c.alpha}/{c.beta}")
    return 0


# ---------------------------------------------------------------------- crt


def _read_congruence_file(path: str) -> list[tuple[int, int]]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseFailure(f"{path}:{lineno}: expected 'r m', got {line!r}")
            pairs.append((parse_number(parts[0]), parse_number(parts[1])))
    return pairs


def cmd_crt(args) -> int:
    pairs = []
    for item in args.congruences:
        r, sep, m = item.partition(":")
        if not sep:
            raise ParseFailure(f"expected r:m, got {item!r}")
        pairs.append((parse_number(r), parse_number(m)))
    if args.file:
        pairs.extend(_read_congruence_file(args.file))
    if not pairs:
        raise ParseFailure("no congruences given (pass r:m arguments or --file)")
    system = CongruenceSystem.from_pairs(pairs)

    if args.method == "bezout":
        solution = solve_bezout(system)
        certificate = None
        basis = None
    else:
        solution, certificate = solve_dayan(system)
        basis = coprimize([c.modulus for c in system.items]).factors

    if args.json:
        payload = {
            "x": str(solution.x0),
            "modulus": str(solution.modulus),
            "method": solution.method,
        }
        if solution.method == "dayan":
            payload["basis"] = [str(f) for f in basis]
            payload["certificate"] = None if certificate is None else {
                "v": [str(v) for v in certificate.multipliers],
                "g": certificate.g,
                "kind": certificate.kind,
            }
        print(json.dumps(payload))
        return 0

    print(f"x ≡ {solution.x0} (mod {solution.modulus})")
    print(f"method: {solution.method}")
    if solution.method == "dayan":
        print("basis: (" + ", ".join(str(f) for f in basis) + ")")
        if certificate is None:
            print("certificate: not applicable (single congruence)")
        else:
            print("v: (" + ", ".join(str(v) for v in certificate.multipliers) + ")")
            print(f"g = {certificate.g} ({certificate.kind})")
    return 0


# ------------------------------------------------------------------- wiener


def cmd_wiener(args) -> int:
    n, e = parse_number(args.N), parse_number(args.e)
    result = wiener_attack(RsaPublicKey(n, e))
    if args.json:
        if result.found:
            print(json.dumps({
                "found": True, "d": str(result.d), "k": str(result.k),
                "p": str(result.p), "q": str(result.q), "phi": str(result.phi),
                "step": result.step,
            }))
        else:
            print(json.dumps({"found": False}))
        return 0
    if not result.found:
        print("no private exponent recovered")
        return 0
    for name in ("d", "k", "p", "q", "phi", "step"):
        print(f"{name} = {getattr(result, name)}")
    return 0


# -------------------------------------------------------------------- bench


@dataclass(frozen=True, slots=True)
class AlgoStats:
    iter_min: int
    iter_median: float
    iter_max: int
    time_min: float
    time_median: float
    time_max: float


@dataclass(frozen=True, slots=True)
class BenchEntry:
    bits: int
    dayan: AlgoStats
    euclid: AlgoStats


@dataclass(frozen=True, slots=True)
class BenchReport:
    seed: int
    trials: int
    entries: tuple[BenchEntry, ...]


def _stats(iters: list[int], times: list[float]) -> AlgoStats:
    return AlgoStats(min(iters), statistics.median(iters), max(iters),
                     min(times), statistics.median(times), max(times))


def run_bench(bit_sizes: Sequence[int], trials: int, seed: int) -> BenchReport:
    """Run both inverse algorithms over seeded coprime pairs per bit size.

    Iteration counts are a pure function of the seed; only the wall times
    vary between runs.  Every trial cross-checks that the two algorithms
    agree before anything is reported.
    """
    rng = Random(seed)
    entries = []
    for bits in bit_sizes:
        pairs = []
        while len(pairs) < trials:
            m = rng.getrandbits(bits) | (1 << (bits - 1))
            a = rng.randrange(2, m)
            if gcd(a, m) == 1:
                pairs.append((a, m))
        d_iters, d_times, e_iters, e_times = [], [], [], []
        for a, m in pairs:
            t0 = time.perf_counter()
            trace = dayan_inverse(a, m)
            t1 = time.perf_counter()
            run = euclid_inverse(a, m)
            t2 = time.perf_counter()
            if trace.result != run.normalized:
                raise ContractViolationError(f"algorithms disagree on ({a}, {m})")
            d_iters.append(len(trace.steps))
            d_times.append(t1 - t0)
            e_iters.append(run.iterations)
            e_times.append(t2 - t1)
        entries.append(BenchEntry(bits, _stats(d_iters, d_times), _stats(e_iters, e_times)))
    return BenchReport(seed, trials, tuple(entries))


def cmd_bench(args, parser: argparse.ArgumentParser) -> int:
    try:
        bit_sizes = [int(part) for part in args.bits.split(",") if part]
    except ValueError:
        parser.error(f"bad bit-size list: {args.bits!r}")
    if not bit_sizes or any(b < 8 for b in bit_sizes):
        parser.error("--bits must list sizes >= 8")
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    report = run_bench(bit_sizes, args.trials, args.seed)
    if args.json:
        print(json.dumps({
            "seed": report.seed,
            "trials": report.trials,
            "results": [
                {
                    "bits": entry.bits,
                    **{
                        name: {
                            "iterations": {"min": s.iter_min, "median": s.iter_median,
                                           "max": s.iter_max},
                            "seconds": {"min": s.time_min, "median": s.time_median,
                                        "max": s.time_max},
                        }
                        for name, s in (("dayan", entry.dayan), ("euclid", entry.euclid))
                    },
                }
                for entry in report.entries
            ],
        }))
        return 0
    for entry in report.entries:
        print(f"bits = {entry.bits}  trials = {report.trials}  seed = {report.seed}")
        for name, s in (("dayan ", entry.dayan), ("euclid", entry.euclid)):
            print(f"  {name}  iterations min={s.iter_min} median={s.iter_median}"
                  f" max={s.iter_max}  time_ms min={s.time_min * 1e3:.3f}"
                  f" median={s.time_median * 1e3:.3f} max={s.time_max * 1e3:.3f}")
    return 0


# ----------------------------------------------------------------- plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dayan",
        description="Modular inverses by the deriving-one state-matrix method, "
                    "with continued fractions, congruence systems, and the "
                    "Wiener small-exponent attack.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit the JSON schema")

    p = sub.add_parser("inv", help="modular inverse a^-1 mod m")
    p.add_argument("a")
    p.add_argument("m")
    p.add_argument("--algo", choices=("dayan", "euclid"), default="dayan")
    p.add_argument("--raw", action="store_true",
                   help="print the signed pre-normalization value (euclid only)")
    add_json(p)
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("gcd", help="gcd with multiplier: u*a + v*m = d")
    p.add_argument("a")
    p.add_argument("m")
    add_json(p)
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("trace", help="full step trace of the inverse run")
    p.add_argument("a")
    p.add_argument("m")
    add_json(p)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("cf", help="continued fraction of a/m with convergents")
    p.add_argument("a")
    p.add_argument("m")
    add_json(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("crt", help="solve simultaneous congruences")
    p.add_argument("congruences", nargs="*", metavar="r:m",
                   help="congruence x = r (mod m)")
    p.add_argument("--file", help="file of 'r m' lines (# comments allowed)")
    p.add_argument("--method", choices=("dayan", "bezout"), default="dayan")
    add_json(p)
    p.set_defaults(func=cmd_crt)

    p = sub.add_parser("wiener", help="recover a small RSA private exponent")
    p.add_argument("N")
    p.add_argument("e")
    add_json(p)
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("bench", help="compare the two inverse algorithms")
    p.add_argument("--bits", default="64", help="comma-separated bit sizes (>= 8)")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    add_json(p)
    p.set_defaults(func=lambda args: cmd_bench(args, parser))

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "inv" and args.raw and args.algo != "euclid":
        parser.error("--raw applies only to --algo euclid")
    try:
        return args.func(args)
    except NotInvertibleError as exc:
        print(f"not invertible: gcd = {exc.gcd}", file=sys.stderr)
        return 1
    except UnsolvableSystemError as exc:
        c = exc.conflict
        print(f"unsolvable system: congruences {c.i} and {c.j} conflict "
              f"modulo gcd = {c.gcd}", file=sys.stderr)
        return 1
    except ParseFailure as exc:
        print(f"parse failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ContractViolationError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
