"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failure, 2 invalid input,
3 resource or feasibility refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from .exceptions import DomainError, ResourceError
from .extremal import EXPLICIT_CEILING, construct, member
from .fp_arith import PrimeModulus, is_prime
from .oracle import max_avoiding_componentwise, max_avoiding_subset_enum
from .orbit import census, classify
from .refute import refute
from .verify import check_avoidance, verify_implicit

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
JOBS_ENV = "SUMPROD_AVOID_JOBS"

SWEEP_FIELDS = (
    "p",
    "delta",
    "n_sixcycles",
    "checksum",
    "constructed_size",
    "verified",
    "oracle_max",
    "wall_time_ms",
)


class InputError(Exception):
    """Unparseable or inconsistent user input."""


def _emit(obj, out=None) -> None:
    print(json.dumps(obj), file=out or sys.stdout)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_construct(args) -> int:
    m = PrimeModulus(args.p)
    if m.p > EXPLICIT_CEILING:
        raise ResourceError(
            f"p={m.p} exceeds the explicit ceiling 2**26; "
            f"use `member --p {m.p} --y Y` or `verify --p {m.p} --implicit`"
        )
    a = construct(m)
    _write(a.to_text() if args.format == "text" else a.to_json() + "\n", args.output)
    return EXIT_OK


def read_set_file(path: str, p: int | None) -> tuple[int, list[int], int]:
    """Parse the text (header + one element per line) or JSON array format."""
    raw = Path(path).read_text()
    stripped = raw.strip()
    target = 1
    if stripped.startswith("["):
        try:
            elements = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON in {path}: {exc}") from None
        if p is None:
            raise InputError("JSON set files carry no modulus; pass --p")
    else:
        lines = [ln.strip() for ln in stripped.splitlines() if ln.strip()]
        if not lines:
            raise InputError(f"{path} is empty")
        header = dict(kv.split("=", 1) for kv in lines[0].split() if "=" in kv)
        try:
            file_p = int(header["p"])
            target = int(header.get("target", 1))
            elements = [int(ln) for ln in lines[1:]]
        except (KeyError, ValueError):
            raise InputError(f"bad header or element line in {path}") from None
        if p is not None and p != file_p:
            raise InputError(f"--p {p} disagrees with file header p={file_p}")
        p = file_p
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in elements):
        raise InputError("set elements must be integers")
    if any(not 0 <= x < p for x in elements):
        raise InputError(f"set elements must lie in [0, {p})")
    if len(set(elements)) != len(elements):
        raise InputError("set contains duplicate elements")
    return p, elements, target


def cmd_verify(args) -> int:
    if args.implicit:
        if args.p is None:
            raise InputError("--implicit requires --p")
        report = verify_implicit(PrimeModulus(args.p), args.samples, args.seed)
    else:
        if args.input is None:
            raise InputError("give a set file or --p P --implicit")
        p, elements, target = read_set_file(args.input, args.p)
        m = PrimeModulus(p)
        if not 0 <= target < p:
            raise InputError(f"target {target} not in [0, {p})")
        report = check_avoidance(elements, m, target)
    _emit(report.to_dict())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_member(args) -> int:
    m = PrimeModulus(args.p)
    _emit({"p": m.p, "y": args.y, "member": member(m.element(args.y), m)})
    return EXIT_OK


def cmd_classify(args) -> int:
    m = PrimeModulus(args.p)
    if args.y is not None:
        _emit(classify(m.element(args.y), m).to_dict())
    else:
        if m.p > EXPLICIT_CEILING:
            raise ResourceError(f"census scans all of F_p; p={m.p} is above 2**26")
        _emit(census(m).to_dict(with_representatives=args.representatives))
    return EXIT_OK


def cmd_oracle(args) -> int:
    m = PrimeModulus(args.p)
    if not 0 <= args.target < m.p:
        raise InputError(f"target {args.target} not in [0, {m.p})")
    if args.method == "subset":
        result = max_avoiding_subset_enum(m, args.target)
    else:
        result = max_avoiding_componentwise(m, args.target, args.component_cap)
    _emit(result.to_dict())
    return EXIT_OK


@dataclass
class SweepRecord:
    p: int
    delta: int
    n_sixcycles: int
    checksum: int
    constructed_size: int
    verified: bool
    oracle_max: int | None
    wall_time_ms: float


def sweep_one(p: int, with_oracle: bool) -> SweepRecord:
    start = time.perf_counter()
    m = PrimeModulus(p)
    cen = census(m)
    a = construct(m)
    report = check_avoidance(a.elements, m)
    verified = report.ok and 2 + 3 + cen.delta + 6 * cen.n_sixcycles == p
    oracle_max = None
    if with_oracle:
        oracle_max = max_avoiding_componentwise(m).max_size
        verified = verified and oracle_max == len(a.elements)
    return SweepRecord(
        p=p,
        delta=cen.delta,
        n_sixcycles=cen.n_sixcycles,
        checksum=cen.checksum,
        constructed_size=len(a.elements),
        verified=verified,
        oracle_max=oracle_max,
        wall_time_ms=round((time.perf_counter() - start) * 1000, 3),
    )


def _sweep_task(job: tuple[int, bool]) -> SweepRecord:
    return sweep_one(*job)


def cmd_sweep(args) -> int:
    if args.p_min > args.p_max:
        raise InputError("--p-min must not exceed --p-max")
    if args.p_max > EXPLICIT_CEILING:
        raise ResourceError("sweeps are limited to p <= 2**26")
    primes = [p for p in range(max(args.p_min, 5), args.p_max + 1) if is_prime(p)]
    jobs = [(p, args.oracle) for p in primes]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_sweep_task, jobs, chunksize=8))
    else:
        records = [_sweep_task(j) for j in jobs]
    records.sort(key=lambda r: r.p)

    if args.output in (None, "-"):
        fh, close = sys.stdout, False
    else:
        fh, close = open(args.output, "w", newline=""), True
    try:
        writer = csv.DictWriter(fh, fieldnames=SWEEP_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in records:
            row = asdict(r)
            row["verified"] = "true" if r.verified else "false"
            row["oracle_max"] = "" if r.oracle_max is None else r.oracle_max
            writer.writerow(row)
    finally:
        if close:
            fh.close()
    if not records:
        print(f"no primes in range [{args.p_min}, {args.p_max}]", file=sys.stderr)
    return EXIT_OK if all(r.verified for r in records) else EXIT_FAIL


def cmd_refute(args) -> int:
    try:
        c = Fraction(args.c)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse c={args.c!r} as a fraction") from None
    w = refute(c, args.p0, samples=args.samples, seed=args.seed)
    _emit(w.to_dict())
    return EXIT_OK if w.verification.ok else EXIT_FAIL


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sumprod-avoid",
        description="Sets A in F_p of size (p-1)/2 with 1 outside A+A and AA.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="write the explicit extremal set")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--output", "-o", default=None, help="file path (default stdout)")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="verify a set file, or the implicit set by sampling")
    sp.add_argument("input", nargs="?", help="set file (text or JSON array)")
    sp.add_argument("--p", type=int)
    sp.add_argument("--implicit", action="store_true")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("member", help="decide membership in the implicit set")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--y", type=int, required=True)
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("classify", help="component of y, or the census of all components")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--y", type=int)
    sp.add_argument("--representatives", action="store_true", help="list six-cycle representatives")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("oracle", help="exact maximum avoiding-set size by brute force")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--target", type=int, default=1)
    sp.add_argument("--method", choices=("subset", "components"), default="components")
    sp.add_argument("--component-cap", type=int, default=64)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sweep", help="construct and verify over a prime range, CSV out")
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--oracle", action="store_true", help="also run the componentwise oracle")
    sp.add_argument("--output", "-o", default=None)
    sp.add_argument("--jobs", "-j", type=int, default=_default_jobs(), help=f"workers (env {JOBS_ENV})")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("refute", help="counterexample for claimed constants c, p0")
    sp.add_argument("--c", required=True, help="exact fraction, e.g. 1/100")
    sp.add_argument("--p0", type=int, default=0)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_refute)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
