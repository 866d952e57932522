"""Command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import tables
from .abelian import FinAbGroup
from .checks import FAIL, PASS, SKIPPED, consistency_suite, select_checks
from .cosets import decompose, verify_decomposition
from .fp import DEFAULT_BOUND, NotPrime, check_bound, is_prime, make_prime

DISPLAY = {
    "sl2z": "SL2(Z)",
    "gamma0": "Gamma0({p})",
    "pgamma0": "PGamma0({p})",
    "sl2zp": "SL2(Z[1/{p}])",
}


class UsageError(Exception):
    pass


def parse_degrees(text: str) -> range:
    """``"0..5"`` (inclusive) or a single degree ``"4"``."""
    try:
        if ".." in text:
            lo, hi = (int(s) for s in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad degree range {text!r}; expected e.g. 0..5") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad degree range {text!r}")
    return range(lo, hi + 1)


def _prime(value) -> int:
    try:
        return int(make_prime(value))
    except NotPrime:
        raise UsageError(f"{value} is not prime") from None


# --- table -------------------------------------------------------------------------

def render_table_text(table: tables.CohomologyTable, degrees: range) -> str:
    name = DISPLAY[table.group].format(p=table.p)
    lines = [f"H^*({name}; Z)"]
    lines += [f"H^{d} = {table[d]}" for d in degrees]
    lines.append(f"period: 2 above degree {table.periodic_above}")
    return "\n".join(lines)


def render_table_json(table: tables.CohomologyTable, degrees: range) -> str:
    return json.dumps(table.to_json(degrees), indent=2)


def parse_table_json(text: str) -> dict:
    """Inverse of :func:`render_table_json`; groups come back as :class:`FinAbGroup`."""
    data = json.loads(text)
    return {
        "p": data["p"],
        "group": data["group"],
        "periodic_above": data["periodic_above"],
        "cohomology": {r["degree"]: FinAbGroup.from_json(r) for r in data["cohomology"]},
    }


def dump_parsed_table(parsed: dict) -> str:
    data = {
        "p": parsed["p"],
        "group": parsed["group"],
        "periodic_above": parsed["periodic_above"],
        "cohomology": [{"degree": d, **g.to_json()} for d, g in sorted(parsed["cohomology"].items())],
    }
    return json.dumps(data, indent=2)


def cmd_table(args) -> int:
    degrees = parse_degrees(args.degrees)
    if args.group == "sl2z":
        p = None
    elif args.p is None:
        raise UsageError(f"--p is required for --group {args.group}")
    else:
        p = _prime(args.p)
    try:
        table = tables.cohomology_table(args.group, p, degrees[-1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    render = render_table_json if args.format == "json" else render_table_text
    print(render(table, degrees))
    return 0


# --- decompose -----------------------------------------------------------------------

def cmd_decompose(args) -> int:
    p = _prime(args.p)
    if p <= 3:
        raise UsageError("decompose needs p > 3")
    try:
        check_bound(p, args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    dec = decompose(p, args.k, args.bound)
    report = verify_decomposition(dec)
    if args.format == "json":
        data = {
            "p": p,
            "k": args.k,
            "orbits": [
                {
                    "representative": [list(r) for r in o.representative.rows()],
                    "size": o.size,
                    "stabilizer_order": o.stabilizer_order,
                    "fixed_root": o.fixed_root,
                    "singular": o.singular,
                }
                for o in dec.orbits
            ],
            "status": PASS if report.ok else "MISMATCH",
        }
        print(json.dumps(data, indent=2))
    else:
        print(f"B-orbits on G/C{args.k}, p={p}")
        print(f"{'representative':<24}{'size':>8}{'stabilizer':>12}  root")
        for o in dec.orbits:
            root = "singular" if o.singular else ("-" if o.fixed_root is None else str(o.fixed_root))
            print(f"{str(o.representative):<24}{o.size:>8}{o.stabilizer_order:>12}  {root}")
        print(report)
    return 0 if report.ok else 1


# --- verify / scan ---------------------------------------------------------------------

def _checks(spec):
    try:
        return select_checks(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args) -> int:
    p = _prime(args.p)
    report = consistency_suite(p, _checks(args.checks), args.bound)
    print(f"p={p}")
    print(report)
    print(f"summary: {report.count(PASS)} passed, {report.count(FAIL)} failed, {report.count(SKIPPED)} skipped")
    return 0 if report.ok else 1


def cmd_scan(args) -> int:
    lo, hi = getattr(args, "from"), args.to
    if lo > hi:
        raise UsageError(f"empty range {lo}..{hi}")
    checks = _checks(args.checks)
    totals = {PASS: 0, FAIL: 0, SKIPPED: 0}
    failed_primes = []
    primes = [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]
    for p in primes:
        report = consistency_suite(p, checks, args.bound)
        for status in totals:
            totals[status] += report.count(status)
        counts = f"{report.count(PASS)} pass, {report.count(FAIL)} fail, {report.count(SKIPPED)} skip"
        print(f"p={p:<6}{'PASS' if report.ok else 'FAIL':<6}{counts}")
        if not report.ok:
            failed_primes.append(p)
            for r in report.results:
                if r.status == FAIL:
                    print(f"    {r}")
    print(f"summary: {len(primes)} primes, {totals[PASS]} passed, {totals[FAIL]} failed, "
          f"{totals[SKIPPED]} skipped")
    if failed_primes:
        print("failing primes: " + " ".join(map(str, failed_primes)))
    return 1 if failed_primes else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2cohom", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    bound_help = (f"enumeration bound for brute-force work (default {DEFAULT_BOUND}); "
                  "memory and time grow like p^3")

    t = sub.add_parser("table", help="print a cohomology table")
    t.add_argument("--group", required=True, choices=tables.GROUPS)
    t.add_argument("--p", type=int)
    t.add_argument("--degrees", default="0..6", help="inclusive range, e.g. 0..5")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_table)

    d = sub.add_parser("decompose", help="B-orbits on G/C_k with stabilizer orders")
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--k", type=int, required=True, choices=(2, 4, 6))
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=bound_help)
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="run the consistency suite for one prime")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--checks", default="all",
                   help="all, closed-form, brute-force, or comma-separated check names")
    v.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=bound_help)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="run checks over every prime in a range")
    s.add_argument("--from", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--checks", default="all")
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=bound_help)
    s.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
