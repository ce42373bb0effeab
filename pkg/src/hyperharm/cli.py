"""Command-line front end: compute sequences, emit tables, run checks.

Exit codes follow the CI contract: 0 on success (all checks pass), 1 when
a verification sweep reports failures, 2 on usage errors.  All rational
values are rendered exactly as ``num/den`` (or a plain integer when the
denominator is 1); no decimal output exists on purpose.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import verify
from .bernoulli import (
    bernoulli_number,
    bernoulli_polynomial,
    poly_bernoulli_number,
    poly_bernoulli_polynomial,
)
from .harmonic import (
    gen_hyperharmonic,
    harmonic_generalized,
    hyper_sum,
    hyperharmonic,
)
from .polynomials import RationalPolynomial
from .stirling import stirling1_r, stirling2_r


def format_rational(value: Fraction) -> str:
    """Exact text form; Fraction(str(x)) round-trips to x."""
    return str(value)


def format_polynomial(poly: RationalPolynomial) -> str:
    """Coefficients in ascending degree, ';'-joined, each exact."""
    if not poly.coeffs:
        return "0"
    return ";".join(format_rational(c) for c in poly.coeffs)


@dataclass(frozen=True)
class SequenceSpec:
    params: tuple[str, ...]
    required: tuple[str, ...]
    func: Callable[..., object]
    polynomial: bool = False


SEQUENCES: dict[str, SequenceSpec] = {
    "harmonic": SequenceSpec(("p",), (), lambda n, p=1: harmonic_generalized(n, p)),
    "hyperharmonic": SequenceSpec(("r",), ("r",), lambda n, r: hyperharmonic(n, r)),
    "gen-hyperharmonic": SequenceSpec(
        ("p", "r"), ("p", "r"), lambda n, p, r: gen_hyperharmonic(n, p, r)
    ),
    "hyper-sum": SequenceSpec(
        ("p", "q"), ("p", "q"), lambda n, p, q: hyper_sum(p, q, n)
    ),
    "bernoulli": SequenceSpec((), (), lambda n: bernoulli_number(n)),
    "poly-bernoulli": SequenceSpec(
        ("p",), ("p",), lambda n, p: poly_bernoulli_number(n, p)
    ),
    "stirling1": SequenceSpec(
        ("k", "r"), ("k", "r"), lambda n, k, r: Fraction(stirling1_r(n, k, r))
    ),
    "stirling2": SequenceSpec(
        ("k", "r"), ("k", "r"), lambda n, k, r: Fraction(stirling2_r(n, k, r))
    ),
    "bernoulli-poly": SequenceSpec(
        (), (), lambda n: bernoulli_polynomial(n), polynomial=True
    ),
    "poly-bernoulli-poly": SequenceSpec(
        ("p",), ("p",), lambda n, p: poly_bernoulli_polynomial(n, p),
        polynomial=True,
    ),
}

DEFAULTS = {"p": 1}


def parse_range(text: str) -> tuple[int, int]:
    """Inclusive integer range 'a..b'; a bare integer means a..a."""
    lo, sep, hi = text.partition("..")
    try:
        low = int(lo)
        high = int(hi) if sep else low
    except ValueError:
        raise ValueError(f"malformed range {text!r}; expected 'a..b'") from None
    if high < low:
        raise ValueError(f"empty range {text!r}")
    return low, high


def _emit(records: list[dict[str, object]], columns: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(records, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(columns)
        for record in records:
            writer.writerow([record[c] for c in columns])


def _flatten(name_field: str, name: str, params: dict[str, int],
             value: str) -> dict[str, object]:
    record: dict[str, object] = {name_field: name}
    record.update(params)
    record["value"] = value
    return record


# --------------------------------------------------------------------------
# compute


def _cmd_compute(args: argparse.Namespace) -> int:
    spec = SEQUENCES[args.sequence]
    params: dict[str, int] = {}
    for pname in spec.params:
        given = getattr(args, pname)
        if given is None:
            if pname in spec.required:
                print(f"error: sequence {args.sequence!r} requires --{pname}",
                      file=sys.stderr)
                return 2
            params[pname] = DEFAULTS[pname]
        else:
            params[pname] = given
    if args.at is not None and not spec.polynomial:
        print("error: --at only applies to polynomial sequences", file=sys.stderr)
        return 2

    lo, hi = args.n
    records = []
    columns = ["sequence", *spec.params, "n"]
    if spec.polynomial and args.at is not None:
        columns.append("at")
    columns.append("value")
    try:
        for n in range(lo, hi + 1):
            result = spec.func(n, **params)
            row_params = dict(params, n=n)
            if spec.polynomial:
                if args.at is not None:
                    row_params["at"] = args.at
                    value = format_rational(result(args.at))
                else:
                    value = format_polynomial(result)
            else:
                value = format_rational(result)
            records.append(_flatten("sequence", args.sequence, row_params, value))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(records, columns, args.format)
    return 0


# --------------------------------------------------------------------------
# verify


def _cmd_verify(args: argparse.Namespace) -> int:
    overrides: dict[str, tuple[int, int]] = {}
    for item in args.range or ():
        name, sep, rng = item.partition("=")
        if not sep:
            print(f"error: malformed --range {item!r}; expected name=a..b",
                  file=sys.stderr)
            return 2
        try:
            overrides[name] = parse_range(rng)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2

    names = verify.check_names() if args.check == "all" else [args.check]
    try:
        reports = []
        for name in names:
            # with "all", an override only applies to checks that use it
            applicable = {
                pname: rng for pname, rng in overrides.items()
                if args.check != "all" or pname in verify.get_check(name).param_names
            }
            reports.append(verify.run_sweep(name, applicable or None))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.format == "json":
        payload = [
            {
                "check": rep.check_name,
                "total": rep.total,
                "failures": [
                    {
                        "params": f.params,
                        "lhs": format_rational(f.lhs),
                        "rhs": format_rational(f.rhs),
                        "note": f.note,
                    }
                    for f in rep.failures
                ],
                "elapsed_s": round(rep.elapsed, 3),
                "status": "pass" if rep.ok else "fail",
            }
            for rep in reports
        ]
        print(json.dumps(payload, indent=2))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(["check", "total", "failures", "elapsed_s", "status"])
        for rep in reports:
            writer.writerow([
                rep.check_name, rep.total, len(rep.failures),
                f"{rep.elapsed:.3f}", "pass" if rep.ok else "fail",
            ])
        for rep in reports:
            for f in rep.failures:
                print(
                    f"FAIL {rep.check_name} {f.params}: "
                    f"lhs={format_rational(f.lhs)} rhs={format_rational(f.rhs)}",
                    file=sys.stderr,
                )
    return 0 if all(rep.ok for rep in reports) else 1


# --------------------------------------------------------------------------
# table


def _cmd_table(args: argparse.Namespace) -> int:
    records = []
    lo, hi = args.n
    if args.name in ("stirling1", "stirling2"):
        if args.r is None:
            print(f"error: table {args.name!r} requires --r", file=sys.stderr)
            return 2
        entry = stirling1_r if args.name == "stirling1" else stirling2_r
        columns = ["table", "r", "n", "k", "value"]
        for n in range(lo, hi + 1):
            for k in range(n + 1):
                records.append(_flatten(
                    "table", args.name, {"r": args.r, "n": n, "k": k},
                    format_rational(Fraction(entry(n, k, args.r))),
                ))
    elif args.name == "bernoulli":
        columns = ["table", "n", "value"]
        for n in range(lo, hi + 1):
            records.append(_flatten(
                "table", args.name, {"n": n},
                format_rational(bernoulli_number(n)),
            ))
    else:  # poly-bernoulli
        if args.p is None:
            print("error: table 'poly-bernoulli' requires --p", file=sys.stderr)
            return 2
        plo, phi = args.p
        columns = ["table", "p", "n", "value"]
        for p in range(plo, phi + 1):
            for n in range(lo, hi + 1):
                records.append(_flatten(
                    "table", args.name, {"p": p, "n": n},
                    format_rational(poly_bernoulli_number(n, p)),
                ))
    _emit(records, columns, args.format)
    return 0


# --------------------------------------------------------------------------
# parser


def _range_arg(text: str) -> tuple[int, int]:
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperharm",
        description=(
            "Exact computation of harmonic, hyperharmonic, Stirling, "
            "Bernoulli and poly-Bernoulli sequences, and mechanical "
            "verification of the identities and congruences relating them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="emit one sequence over a range of n"
    )
    p_compute.add_argument("sequence", choices=sorted(SEQUENCES))
    p_compute.add_argument("--n", type=_range_arg, required=True,
                           metavar="A..B", help="inclusive range of n")
    p_compute.add_argument("--p", type=int, help="power/order index")
    p_compute.add_argument("--q", type=int, help="hyper-sum depth")
    p_compute.add_argument("--r", type=int, help="recursion depth / shift")
    p_compute.add_argument("--k", type=int, help="column index")
    p_compute.add_argument("--at", type=int,
                           help="evaluate polynomial sequences at this point")
    p_compute.add_argument("--format", choices=("csv", "json"), default="csv")
    p_compute.set_defaults(handler=_cmd_compute)

    p_verify = sub.add_parser(
        "verify", help="run one registered check (or all) over its sweep"
    )
    p_verify.add_argument("check", help="check name or 'all'")
    p_verify.add_argument("--range", action="append", metavar="NAME=A..B",
                          help="override a sweep range (repeatable)")
    p_verify.add_argument("--format", choices=("csv", "json"), default="csv")
    p_verify.set_defaults(handler=_cmd_verify)

    p_table = sub.add_parser("table", help="emit a number triangle or row")
    p_table.add_argument(
        "name", choices=("stirling1", "stirling2", "bernoulli", "poly-bernoulli")
    )
    p_table.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    p_table.add_argument("--r", type=int, help="Stirling shift")
    p_table.add_argument("--p", type=_range_arg, metavar="A..B",
                         help="poly-Bernoulli order range")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.set_defaults(handler=_cmd_table)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and args.check != "all":
        if args.check not in verify.check_names():
            print(f"error: unknown check {args.check!r}; known checks: "
                  f"{', '.join(verify.check_names())}", file=sys.stderr)
            return 2
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
