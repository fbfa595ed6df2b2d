"""Command-line driver.

Subcommands map one-to-one onto the audit and suite entry points; every task
produces one JSON object per line with deterministic field order.  Exit codes:
0 when all expectations hold, 1 for usage/configuration errors, 2 when a
theorem-level expectation fails (the offending witness goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .audits import AuditKind, audit_theorems, primes_in_range, reproduce_counterexamples
from .errors import BoundViolationError, TheoremViolation
from .suites import run_identity_suite, run_stepanov_suite, run_unity_suite

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

_VERIFY_KINDS = {
    "sarkozy": AuditKind.SARKOZY_PRODUCT,
    "ratio": AuditKind.SHIFTED_RATIO,
    "levsonn": AuditKind.LEV_SONN_DIFFERENCE,
    "kalmynin-sum": AuditKind.KALMYNIN_SUM,
    "clique": AuditKind.PALEY_CLIQUE,
}

_VERIFY_DEFAULTS = {
    "sarkozy": (3, 61),
    "ratio": (3, 31),
    "levsonn": (3, 61),
    "kalmynin-sum": (3, 61),
    "clique": (17, 101),
}


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(sorted({int(part) for part in text.split(",") if part.strip()}))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}") from exc
    if not orders or any(d < 1 for d in orders):
        raise argparse.ArgumentTypeError(f"bad order list {text!r}")
    return orders


def _add_range_flags(parser: argparse.ArgumentParser, p_min: int, p_max: int) -> None:
    parser.add_argument("--pmin", type=int, default=p_min,
                        help=f"smallest prime (default {p_min})")
    parser.add_argument("--pmax", type=int, default=p_max,
                        help=f"largest prime (default {p_max})")
    parser.add_argument("--orders", type=_parse_orders, default=None,
                        help="comma-separated subgroup orders (default: all proper)")
    parser.add_argument("--oracle", choices=("on", "off"), default="on",
                        help="cross-check against the brute-force oracle at small p")
    parser.add_argument("--workers", type=int, default=1,
                        help="parallel worker processes (default 1)")
    parser.add_argument("--out", default=None, help="write records here instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftdecomp",
        description="Exhaustive audits of shifted-subgroup decomposition claims.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run a theorem audit with assertions")
    verify_sub = verify.add_subparsers(dest="which", required=True)
    for name, (p_min, p_max) in _VERIFY_DEFAULTS.items():
        sub = verify_sub.add_parser(name)
        _add_range_flags(sub, p_min, p_max)
        if name == "sarkozy":
            sub.add_argument("--lambda-scope", dest="lambda_scope",
                             choices=("in-g", "not-in-g", "all"), default="in-g",
                             help="which shifts to audit (default in-g)")

    census = commands.add_parser("census", help="report findings without assertions")
    census_sub = census.add_subparsers(dest="which", required=True)
    census_cmd = census_sub.add_parser("lambda-not-in-g")
    _add_range_flags(census_cmd, 3, 19)

    reproduce = commands.add_parser("reproduce", help="re-derive the known witnesses")
    reproduce_sub = reproduce.add_subparsers(dest="which", required=True)
    reproduce_cmd = reproduce_sub.add_parser("counterexamples")
    reproduce_cmd.add_argument("--out", default=None)

    stepanov = commands.add_parser("stepanov", help="auxiliary-polynomial suite")
    stepanov_sub = stepanov.add_subparsers(dest="which", required=True)
    stepanov_cmd = stepanov_sub.add_parser("audit")
    stepanov_cmd.add_argument("--instances", type=int, default=1000)
    stepanov_cmd.add_argument("--seed", type=int, default=20260815)
    stepanov_cmd.add_argument("--out", default=None)

    identities = commands.add_parser("identities", help="exact identity fuzzing")
    identities_sub = identities.add_subparsers(dest="which", required=True)
    identities_cmd = identities_sub.add_parser("fuzz")
    identities_cmd.add_argument("--seed", type=int, default=20260815)
    identities_cmd.add_argument("--out", default=None)

    unity = commands.add_parser("unity", help="roots-of-unity suite")
    unity_sub = unity.add_subparsers(dest="which", required=True)
    unity_cmd = unity_sub.add_parser("audit")
    unity_cmd.add_argument("--mmax-claim", dest="mmax_claim", type=int, default=100)
    unity_cmd.add_argument("--mmax-pairs", dest="mmax_pairs", type=int, default=50)
    unity_cmd.add_argument("--mmax-maps", dest="mmax_maps", type=int, default=8)
    unity_cmd.add_argument("--out", default=None)

    return parser


def _emit(records, out_path: str | None) -> None:
    lines = [json.dumps(record, sort_keys=True) for record in records]
    if out_path is None:
        for line in lines:
            print(line)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            for line in lines:
                handle.write(line + "\n")


def _violation(exc: Exception) -> int:
    print(f"VIOLATION: {exc}", file=sys.stderr)
    record = getattr(exc, "record", None)
    if record is not None:
        print(json.dumps(record, sort_keys=True), file=sys.stderr)
    return EXIT_VIOLATION


def _run_audit(args, kind: AuditKind) -> int:
    if args.pmin > args.pmax or not primes_in_range(args.pmin, args.pmax):
        print(f"error: no odd primes in [{args.pmin}, {args.pmax}]", file=sys.stderr)
        return EXIT_USAGE
    if args.workers < 1:
        print("error: --workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    kinds = [kind]
    if kind is AuditKind.SARKOZY_PRODUCT:
        scope = getattr(args, "lambda_scope", "in-g")
        if scope == "not-in-g":
            kinds = [AuditKind.LAMBDA_CENSUS]
        elif scope == "all":
            kinds = [AuditKind.SARKOZY_PRODUCT, AuditKind.LAMBDA_CENSUS]
    records = []
    try:
        for k in kinds:
            records.extend(
                audit_theorems(
                    args.pmin,
                    args.pmax,
                    k,
                    orders=args.orders,
                    oracle=args.oracle == "on",
                    workers=args.workers,
                )
            )
    except TheoremViolation as exc:
        return _violation(exc)
    _emit(records, args.out)
    return EXIT_OK


def _run_reproduce(args) -> int:
    try:
        records = reproduce_counterexamples()
    except TheoremViolation as exc:
        return _violation(exc)
    _emit(records, args.out)
    return EXIT_OK


def _run_stepanov(args) -> int:
    if args.instances < 1:
        print("error: --instances must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = run_stepanov_suite(instances=args.instances, seed=args.seed)
    except (BoundViolationError, TheoremViolation) as exc:
        return _violation(exc)
    summary = {
        "task": "stepanov-suite",
        "instances": result.instances,
        "lam_in_g_instances": result.lam_in_g_instances,
        "general_equalities": result.general_equalities,
        "shifted_equalities": result.shifted_equalities,
        "anomalies": len(result.anomalies),
        "additive_checked": result.additive_checked,
        "additive_failures": len(result.additive_failures),
        "flagship_degree": result.flagship_degree,
        "passed": result.passed,
    }
    _emit([summary], args.out)
    if not result.passed:
        print(f"VIOLATION: stepanov suite failed: {result}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _run_identities(args) -> int:
    result = run_identity_suite(seed=args.seed)
    summary = {
        "task": "identity-suite",
        "gf_checked": result.gf_checked,
        "newton_checked": result.newton_checked,
        "derivative_checked": result.derivative_checked,
        "harmonic_checked": result.harmonic_checked,
        "failures": len(result.failures),
        "passed": result.passed,
    }
    _emit([summary], args.out)
    if not result.passed:
        print(f"VIOLATION: identity suite failed: {result.failures[:5]}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _run_unity(args) -> int:
    if args.mmax_claim < 3 or args.mmax_pairs < 3 or not 3 <= args.mmax_maps <= 12:
        print("error: unity bounds need mmax >= 3 (maps <= 12)", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = run_unity_suite(
            claim_max=args.mmax_claim,
            decomposition_max=args.mmax_pairs,
            classify_max=args.mmax_maps,
        )
    except TheoremViolation as exc:
        return _violation(exc)
    summary = {
        "task": "unity-suite",
        "claim_orders_checked": result.claim_orders_checked,
        "decomposition_orders_checked": result.decomposition_orders_checked,
        "classified_orders": list(result.classified_orders),
        "claim_failures": list(result.claim_failures),
        "decomposition_witnesses": len(result.decomposition_witnesses),
        "max_quadruple_class": result.max_quadruple_class,
        "passed": result.passed,
    }
    _emit([summary], args.out)
    if not result.passed:
        print(f"VIOLATION: unity suite failed: {result}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.command == "verify":
        return _run_audit(args, _VERIFY_KINDS[args.which])
    if args.command == "census":
        return _run_audit(args, AuditKind.LAMBDA_CENSUS)
    if args.command == "reproduce":
        return _run_reproduce(args)
    if args.command == "stepanov":
        return _run_stepanov(args)
    if args.command == "identities":
        return _run_identities(args)
    if args.command == "unity":
        return _run_unity(args)
    print(f"error: unknown command {args.command}", file=sys.stderr)  # pragma: no cover
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
