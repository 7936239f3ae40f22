"""Command-line front end: ``rowconvex {count,table,verify,bounds,asymptotics,gf}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import analysis, core, enumeration, genfunc, oracle
from .errors import LimitExceededError, NumericalError, UnsupportedCaseError

# S(1..12) as tabulated for column-convex polyominoes (OEIS A001169)
REFERENCE_TABLE = (
    (1, 1), (2, 2), (3, 6), (4, 19), (5, 61), (6, 196),
    (7, 629), (8, 2017), (9, 6466), (10, 20727), (11, 66441), (12, 212980),
)

EXPONENTIAL_CHECK_CAP = 22
TRANSFER_CHECK_CAP = 50
ORACLE_CHECK_CAP = 11


# -- formatting -------------------------------------------------------------

def format_table(series: enumeration.CountSeries, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "S_N"])
        w.writerows(series.items())
        return buf.getvalue()
    if fmt == "json":
        rows = [{"n": n, "s": str(s)} for n, s in series.items()]
        return json.dumps(rows, separators=(",", ":")) + "\n"
    if fmt == "plain":
        width = len(str(series[series.n_max]))
        nw = max(1, len(str(series.n_max)))
        lines = [f"{'N':>{nw}}  {'S(N)':>{width}}"]
        lines += [f"{n:>{nw}}  {s:>{width}}" for n, s in series.items()]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# -- verification -----------------------------------------------------------

@dataclass
class Check:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _first_mismatch(name_a, a, name_b, b):
    for n, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return f"N={n}: {name_a}={x} {name_b}={y}"
    return None


def run_verification(n_max: int, reference=REFERENCE_TABLE, oracle_cap: int = ORACLE_CHECK_CAP) -> list[Check]:
    """Cross-check every counting route up to ``n_max``; see ``rowconvex verify``."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    checks: list[Check] = []
    dp = enumeration.count_by_transfer_dp(n_max)
    rec = enumeration.count_by_linear_recurrence(n_max)
    gf = enumeration.count_by_generating_function(n_max)

    ref = [(n, s) for n, s in reference if n <= n_max]
    bad = [f"N={n}: expected={s} actual={dp[n]}" for n, s in ref if dp[n] != s]
    checks.append(Check(f"reference table N=1..{len(ref)}", "FAIL" if bad else "PASS", "; ".join(bad)))

    for name, other in (("recurrence", rec), ("gf", gf)):
        msg = _first_mismatch("dp", dp, name, other)
        checks.append(Check(f"dp == {name} N=1..{n_max}", "FAIL" if msg else "PASS", msg or ""))

    cap = min(n_max, EXPONENTIAL_CHECK_CAP)
    for name, fn in (("partition", enumeration.count_by_partition_formula),
                     ("composition", enumeration.count_by_composition_sum)):
        msg = None
        for n in range(1, cap + 1):
            v = fn(n)
            if v != dp[n]:
                msg = f"N={n}: dp={dp[n]} {name}={v}"
                break
        checks.append(Check(f"dp == {name} N=1..{cap}", "FAIL" if msg else "PASS", msg or ""))

    cap = min(n_max, oracle_cap)
    msg = None
    for n in range(1, cap + 1):
        v = oracle.count_row_convex_oracle(n)
        if v != dp[n]:
            msg = f"N={n}: dp={dp[n]} oracle={v}"
            break
    checks.append(Check(f"dp == oracle N=1..{cap}", "FAIL" if msg else "PASS", msg or ""))

    if n_max >= 5:
        res = enumeration.recurrence_residuals(dp)
        nz = [(n, r) for n, r in enumerate(res, start=5) if r]
        detail = "" if not nz else f"N={nz[0][0]}: residual={nz[0][1]}"
        checks.append(Check(f"recurrence residual N=5..{n_max}", "FAIL" if nz else "PASS", detail))
    else:
        checks.append(Check("recurrence residual", "SKIP", "needs N >= 5"))

    cap = min(n_max, EXPONENTIAL_CHECK_CAP)
    msg = None
    for n in range(1, cap + 1):
        total = sum(core.permutation_factor(p) for p in core.generate_partitions(n))
        if total != 2 ** (n - 1):
            msg = f"N={n}: sum={total} expected={2 ** (n - 1)}"
            break
    checks.append(Check(f"sum of permutation factors == 2^(N-1) N=1..{cap}", "FAIL" if msg else "PASS", msg or ""))

    order = min(n_max, TRANSFER_CHECK_CAP)
    rep = genfunc.verify_transfer_identities(order)
    failed = [k for k, ok in rep.checks.items() if not ok]
    checks.append(Check(f"transfer identities mod x^{order + 1}", "FAIL" if failed else "PASS",
                        ", ".join(failed)))
    return checks


# -- commands ---------------------------------------------------------------

def _write(text: str, output: str | None):
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_count(args) -> int:
    value = enumeration.count(args.n, args.method)
    print(value)
    if args.dump:
        _write(oracle.dump_text(oracle.enumerate_fixed_polyominoes(args.n)
                                if args.dump_all else
                                (p for p in oracle.enumerate_fixed_polyominoes(args.n)
                                 if oracle.is_row_convex(p))), args.dump)
    return 0


def cmd_table(args) -> int:
    fns = {"dp": enumeration.count_by_transfer_dp,
           "recurrence": enumeration.count_by_linear_recurrence,
           "gf": enumeration.count_by_generating_function}
    _write(format_table(fns[args.method](args.to), args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    checks = run_verification(args.to)
    for c in checks:
        print(c.line())
    return 1 if any(c.status == "FAIL" for c in checks) else 0


def cmd_bounds(args) -> int:
    rep = analysis.reflection_bounds(args.n)
    if args.json:
        print(json.dumps(rep.to_dict(), separators=(",", ":")))
    else:
        print(f"n     {rep.n}")
        print(f"lower {rep.lower}")
        print(f"exact {rep.exact if rep.exact is not None else 'n/a'}")
        print(f"upper {rep.upper}")
    return 0


def cmd_asymptotics(args) -> int:
    rep = analysis.asymptotic_report(args.terms, max(args.digits, 1))
    if args.json:
        print(json.dumps(rep.to_dict(args.digits), separators=(",", ":")))
    else:
        sys.stdout.write(rep.to_text(args.digits))
    return 0


def cmd_gf(args) -> int:
    series = genfunc.series_expand(genfunc.ROW_CONVEX_GF, args.order)
    print(" ".join(str(c) for c in series.coefficients))
    return 0


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _non_negative(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rowconvex", description="Count row-convex polyominoes by area.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print S(n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--method", choices=enumeration.METHODS, default="dp")
    p.add_argument("--dump", metavar="FILE", help="write the row-convex shapes of area n as text art ('-' for stdout)")
    p.add_argument("--dump-all", action="store_true", help="with --dump, include every fixed polyomino")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print S(1..N)")
    p.add_argument("--to", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json", "plain"), default="plain")
    p.add_argument("--method", choices=("dp", "recurrence", "gf"), default="dp")
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check all counting methods")
    p.add_argument("--to", type=_positive, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bounds on the count up to mirror image")
    p.add_argument("n", type=_positive)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("asymptotics", help="singularity analysis report")
    p.add_argument("--terms", type=_positive, default=200)
    p.add_argument("--digits", type=_non_negative, default=12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("gf", help="coefficients of the generating function")
    p.add_argument("--order", type=_non_negative, required=True)
    p.set_defaults(func=cmd_gf)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LimitExceededError as exc:
        method = getattr(args, "method", args.command)
        print(f"rowconvex: {method}: {exc}", file=sys.stderr)
        return 2
    except (OSError, NumericalError, UnsupportedCaseError, ValueError) as exc:
        print(f"rowconvex: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
