"""Command-line front end: family tables, convexity checks, full verification.

Exit codes are kept distinguishable: 0 success, 1 verification failure,
2 usage error (argparse's convention), 3 I/O failure.  All machine formats
emit numbers as decimal strings, since the integers here overflow the
native number types of most downstream tools.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .criteria import (
    criterion_c2_sweep,
    log_convex_check,
    q_log_convex_direct,
    sweep_passes,
)
from .families import (
    ARRAY_KINDS,
    FAMILY_TAGS,
    FamilyStore,
    default_cache_path,
    domb_number,
    get_array,
)
from .hiprec import ccl_constant_bounds, fraction_to_decimal
from .verification import (
    SERIES_TOLERANCE,
    VerificationConfig,
    chan_partial_sum,
    run_full_verification,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _write_output(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _families_text(args) -> str:
    store = FamilyStore(args.cache)
    lines = []
    for n in range(args.n_from, args.n_max + 1):
        poly = store.poly(args.family, n)
        lines.append(" ".join(str(poly.coefficient(k)) for k in range(n + 1)))
    store.flush()
    return "\n".join(lines) + "\n"


def _families_csv(args) -> str:
    store = FamilyStore(args.cache)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "k", "coefficient"])
    for n in range(args.n_from, args.n_max + 1):
        poly = store.poly(args.family, n)
        for k in range(n + 1):
            writer.writerow([str(n), str(k), str(poly.coefficient(k))])
    store.flush()
    return buf.getvalue()


def _families_json(args) -> str:
    store = FamilyStore(args.cache)
    rows = []
    for n in range(args.n_from, args.n_max + 1):
        poly = store.poly(args.family, n)
        rows.append({"n": str(n), "coefficients": [str(poly.coefficient(k)) for k in range(n + 1)]})
    store.flush()
    return json.dumps({"family": args.family, "rows": rows}, indent=2) + "\n"


def cmd_families(args) -> int:
    renderers = {"text": _families_text, "csv": _families_csv, "json": _families_json}
    try:
        _write_output(renderers[args.format](args), args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_check(args) -> int:
    if args.kind == "qlc":
        witnesses = q_log_convex_direct(args.family, args.n_max, jobs=args.jobs)
        bad = [w for w in witnesses if not w.passed]
        summary = {
            "check": "qlc",
            "family": args.family,
            "n_max": str(args.n_max),
            "result": "pass" if not bad else "fail",
        }
        if bad:
            summary["first_witness"] = (
                f"n={bad[0].n}, coefficient {bad[0].first_negative_coefficient_index}"
            )
        passed = not bad
    elif args.kind == "logconvex":
        numbers = [domb_number(n) for n in range(args.n_max + 1)]
        failure = log_convex_check(numbers, strict=True)
        summary = {
            "check": "logconvex",
            "sequence": "domb_numbers",
            "n_max": str(args.n_max),
            "result": "pass" if failure is None else "fail",
        }
        if failure is not None:
            summary["first_witness"] = f"index {failure}"
        passed = failure is None
    else:  # crossing
        array = get_array(args.array)
        violations = []
        for n in range(1, args.n_max + 1):
            results = criterion_c2_sweep(array, n)
            if not sweep_passes(results):
                violations.append(n)
        summary = {
            "check": "crossing",
            "array": args.array,
            "n_max": str(args.n_max),
            "result": "pass" if not violations else "fail",
        }
        if violations:
            summary["first_witness"] = f"n={violations[0]}"
        passed = not violations

    if args.format == "json":
        text = json.dumps(summary, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(list(summary.keys()))
        writer.writerow(list(summary.values()))
        text = buf.getvalue()
    else:
        text = "\n".join(f"{key}: {value}" for key, value in summary.items()) + "\n"
    try:
        _write_output(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILURE


def _certificate_csv(certificate) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["claim", "params", "outcome", "witness"])
    for record in certificate.claims:
        params = ";".join(f"{k}={v}" for k, v in sorted(record.params.items()))
        witness = ";".join(f"{k}={v}" for k, v in sorted(record.witness.items()))
        writer.writerow([record.claim, params, record.outcome, witness])
    writer.writerow(["verdict", "", certificate.verdict, ""])
    return buf.getvalue()


def _certificate_text(certificate) -> str:
    lines = [f"version: {certificate.version}", f"timestamp: {certificate.timestamp}"]
    for record in certificate.claims:
        params = " ".join(f"{k}={v}" for k, v in sorted(record.params.items()))
        line = f"{record.outcome.upper():4s} {record.claim} {params}"
        if record.witness:
            line += "  [" + "; ".join(f"{k}={v}" for k, v in sorted(record.witness.items())) + "]"
        lines.append(line)
    lines.append(f"verdict: {certificate.verdict}")
    return "\n".join(lines) + "\n"


def cmd_verify_paper(args) -> int:
    config = VerificationConfig(
        n_max_direct=args.n_max_direct,
        n_max_factorization=args.n_max_factorization,
        n_max_sturm=args.n_max_sturm,
        series_N=args.series_N,
        series_digits=args.digits,
        parallelism=args.jobs,
        cache_path=args.cache,
        output_format=args.format,
        n_max_monotonicity=args.n_max_monotonicity,
        n_max_root_ratio=args.n_max_root_ratio,
    )
    try:
        config.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    certificate = run_full_verification(config)

    # one-line verdict per claim family; kept off the certificate stream
    summary_stream = sys.stdout if args.out else sys.stderr
    by_claim: dict[str, list] = {}
    for record in certificate.claims:
        by_claim.setdefault(record.claim, []).append(record)
    for claim in sorted(by_claim):
        records = by_claim[claim]
        failed = sum(1 for r in records if not r.passed)
        status = "pass" if failed == 0 else f"FAIL ({failed}/{len(records)} records)"
        print(f"{claim}: {status}", file=summary_stream)
    print(f"overall: {certificate.verdict}", file=summary_stream)

    if args.format == "json":
        text = certificate.dumps()
    elif args.format == "csv":
        text = _certificate_csv(certificate)
    else:
        text = _certificate_text(certificate)
    try:
        _write_output(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if certificate.passed else EXIT_VERIFICATION_FAILURE


def cmd_series(args) -> int:
    partial = chan_partial_sum(args.series_N)
    lo, hi = ccl_constant_bounds(args.digits)
    distance_bound = max(abs(partial - lo), abs(partial - hi))
    passed = distance_bound < SERIES_TOLERANCE
    summary = {
        "N": str(args.series_N),
        "partial_sum": fraction_to_decimal(partial, args.digits),
        "constant_low": fraction_to_decimal(lo, args.digits),
        "constant_high": fraction_to_decimal(hi, args.digits),
        "distance_bound": fraction_to_decimal(distance_bound, args.digits),
        "tolerance": "1e-28",
        "result": "pass" if passed else "fail",
    }
    if args.format == "json":
        text = json.dumps(summary, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(list(summary.keys()))
        writer.writerow(list(summary.values()))
        text = buf.getvalue()
    else:
        text = "\n".join(f"{key}: {value}" for key, value in summary.items()) + "\n"
    try:
        _write_output(text, args.out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILURE


def _add_common_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument("--cache", metavar="PATH", default=default_cache_path())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlogconvex",
        description="Exact q-log-convexity toolkit for Domb and Narayana-type families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fam = sub.add_parser("families", help="emit family coefficient tables")
    p_fam.add_argument("--family", choices=FAMILY_TAGS, required=True)
    p_fam.add_argument("--n-from", type=int, default=0)
    p_fam.add_argument("--n-max", type=int, required=True)
    _add_common_output_args(p_fam)
    p_fam.set_defaults(func=cmd_families)

    p_check = sub.add_parser("check", help="run a single convexity/crossing check")
    p_check.add_argument("kind", choices=("qlc", "logconvex", "crossing"))
    p_check.add_argument("--family", choices=FAMILY_TAGS, default="D")
    p_check.add_argument("--array", choices=ARRAY_KINDS, default="domb_a")
    p_check.add_argument("--n-max", type=int, required=True)
    p_check.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    _add_common_output_args(p_check)
    p_check.set_defaults(func=cmd_check)

    p_verify = sub.add_parser("verify-paper", help="full verification with certificate")
    p_verify.add_argument("--n-max-direct", type=int, default=150)
    p_verify.add_argument("--n-max-factorization", type=int, default=60)
    p_verify.add_argument("--n-max-sturm", type=int, default=100)
    p_verify.add_argument("--n-max-monotonicity", type=int, default=300)
    p_verify.add_argument("--n-max-root-ratio", type=int, default=120)
    p_verify.add_argument("--series-N", type=int, default=100, dest="series_N")
    p_verify.add_argument("--digits", type=int, default=40)
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    _add_common_output_args(p_verify)
    p_verify.set_defaults(func=cmd_verify_paper, format="json")

    p_series = sub.add_parser("series", help="partial sums of the 1/pi series")
    p_series.add_argument("--series-N", type=int, default=100, dest="series_N")
    p_series.add_argument("--digits", type=int, default=40)
    _add_common_output_args(p_series)
    p_series.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "n_from") and args.command == "families":
        if args.n_from < 0 or args.n_from > args.n_max:
            parser.error(f"empty range: n-from={args.n_from}, n-max={args.n_max}")
    if hasattr(args, "n_max") and args.n_max < 0:
        parser.error(f"n-max must be nonnegative, got {args.n_max}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
