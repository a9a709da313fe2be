"""Command-line front end.

Exit codes: 0 verified, 1 falsified or inconclusive, 2 usage error,
3 internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from . import report as rpt
from .catalog import Arity, Kind, identity_info, list_identities, verify_finite
from .errors import FibArctanError, UsageError
from .fib import AlgebraicFamily, _family, algebraic_sides
from .selftest import FULL, QUICK, algebraic_grid, run_selftest
from .series import verify_infinite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def parse_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive ``a..b`` range (a single integer means ``a..a``)."""
    try:
        if ".." in text:
            a, b = (int(s) for s in text.split("..", 1))
        else:
            a = b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r} (need a <= b)")
    return a, b


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="report elapsed_ms as 0 for byte-reproducible output")

    parser = argparse.ArgumentParser(
        prog="fibarctan", parents=[common],
        description="Exact and certified checks of Fibonacci/Lucas arctangent identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", parents=[common], help="list catalog identities")

    p = sub.add_parser("verify", parents=[common], help="verify one identity instance")
    p.add_argument("id")
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--digits", type=_positive, default=30)

    p = sub.add_parser("sweep", parents=[common], help="verify an identity over a grid")
    p.add_argument("id")
    p.add_argument("--m-range", type=parse_range)
    p.add_argument("--t-range", type=parse_range)
    p.add_argument("--n-range", type=parse_range)
    p.add_argument("--digits", type=_positive, default=30)
    p.add_argument("--jobs", type=_positive, default=1)

    p = sub.add_parser("eval", parents=[common], help="certified values of an infinite identity")
    p.add_argument("id")
    p.add_argument("--m", type=int)
    p.add_argument("--digits", type=_positive, default=30)

    p = sub.add_parser("algebraic", parents=[common], help="check an algebraic F/L identity family")
    p.add_argument("family")
    p.add_argument("--m-range", type=parse_range, required=True)
    p.add_argument("--n-range", type=parse_range, required=True)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in grids")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quick", dest="depth", action="store_const", const="quick")
    g.add_argument("--full", dest="depth", action="store_const", const="full")
    p.set_defaults(depth="quick")
    return parser


class Output:
    def __init__(self, fmt: str, timing: bool, out=None):
        self.fmt = fmt
        self.timing = timing
        self.out = out or sys.stdout

    def write(self, text: str) -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")

    def reports(self, records: List[dict]) -> None:
        if self.fmt == "json":
            self.write(rpt.dumps(records[0] if len(records) == 1 else records))
        elif self.fmt == "csv":
            self.write(rpt.to_csv(records))
        else:
            self.write("\n".join(rpt.to_text(r) for r in records))


def _run_one(job) -> dict:
    identity, m, second, digits, timing = job
    info = identity_info(identity)
    if info.kind is Kind.FINITE:
        return rpt.record(verify_finite(identity, m, second), timing)
    return rpt.record(verify_infinite(identity, m, digits), timing)


def _status_code(records) -> int:
    return EXIT_OK if all(r["status"] == "verified" for r in records) else EXIT_FAIL


def cmd_list(args, out: Output) -> int:
    records = [rpt.info_record(i) for i in list_identities()]
    if out.fmt == "json":
        out.write(rpt.dumps(records))
    elif out.fmt == "csv":
        out.write(rpt.to_csv(records, fieldnames=list(records[0])))
    else:
        for r in records:
            out.write(f"{r['id']:8} ({r['parity']:6}) {r['kind']:8} [{r['arity']}]  {r['description']}")
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    info = identity_info(args.id)
    if info.kind is Kind.FINITE:
        if info.arity is Arity.M_N:
            second = args.n if args.n is not None else args.t
        else:
            if args.n is not None:
                raise UsageError(f"{info.id} does not take --n")
            second = args.t
        rec = rpt.record(verify_finite(info.id, args.m, second), out.timing)
    else:
        if args.t is not None or args.n is not None:
            raise UsageError(f"{info.id} is an infinite identity; it takes no --t/--n")
        rec = rpt.record(verify_infinite(info.id, args.m, args.digits), out.timing)
    out.reports([rec])
    return _status_code([rec])


def _sweep_jobs(args, info) -> list:
    if info.kind is Kind.INFINITE:
        if info.arity is Arity.NONE:
            return [(info.id, None, None, args.digits, None)]
        if args.m_range is None:
            raise UsageError("sweep over an infinite identity needs --m-range")
        lo, hi = args.m_range
        return [(info.id, m, None, args.digits, None)
                for m in range(lo, hi + 1) if m >= 0 and info.admits_m(m)]
    second_range = args.n_range if info.arity is Arity.M_N else args.t_range
    if info.arity is Arity.M_N and second_range is None:
        second_range = args.t_range
    if second_range is None:
        raise UsageError(f"sweep {info.id} needs --{'n' if info.arity is Arity.M_N else 't'}-range")
    seconds = range(second_range[0], second_range[1] + 1)
    if info.arity is Arity.T:
        return [(info.id, None, s, None, None) for s in seconds]
    if args.m_range is None:
        raise UsageError(f"sweep {info.id} needs --m-range")
    ms = [m for m in range(args.m_range[0], args.m_range[1] + 1) if m >= 0 and info.admits_m(m)]
    return [(info.id, m, s, None, None) for m in ms for s in seconds]


def cmd_sweep(args, out: Output) -> int:
    info = identity_info(args.id)
    jobs = [job[:4] + (out.timing,) for job in _sweep_jobs(args, info)]
    if not jobs:
        raise UsageError(f"empty grid: no parameter combination satisfies {info.id} "
                         f"({info.parity.value})")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs))))
    else:
        records = [_run_one(job) for job in jobs]
    failed = [r for r in records if r["status"] != "verified"]
    if out.fmt == "csv":
        out.write(rpt.to_csv(records))
    else:
        summary = {
            "id": info.id,
            "checked": len(records),
            "verified": len(records) - len(failed),
            "failed": len(failed),
            "first_counterexample": failed[0] if failed else None,
        }
        if out.fmt == "json":
            out.write(rpt.dumps(summary))
        else:
            out.write(f"{info.id}: {summary['verified']} verified, {summary['failed']} failed "
                      f"of {summary['checked']}")
            if failed:
                out.write("first counterexample:\n" + rpt.to_text(failed[0]))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_eval(args, out: Output) -> int:
    info = identity_info(args.id)
    if info.kind is not Kind.INFINITE:
        raise UsageError(f"eval needs an infinite identity; {info.id} is finite (use verify)")
    rec = rpt.record(verify_infinite(info.id, args.m, args.digits), out.timing)
    out.reports([rec])
    return _status_code([rec])


def cmd_algebraic(args, out: Output) -> int:
    family = _family(args.family)
    checked, failures = 0, []
    for m, n in algebraic_grid(family, args.m_range, args.n_range):
        checked += 1
        lhs, rhs = algebraic_sides(family, m, n)
        if lhs != rhs:
            failures.append({"m": m, "n": n, "lhs": str(lhs), "rhs": str(rhs)})
    if not checked:
        raise UsageError(f"empty grid: {family.value} requires {family.parity.value}")
    summary = {"family": family.value, "formula": family.formula, "checked": checked,
               "failed": len(failures), "first_counterexample": failures[0] if failures else None}
    if out.fmt == "json":
        out.write(rpt.dumps(summary))
    elif out.fmt == "csv":
        out.write(rpt.to_csv([{k: v for k, v in summary.items() if k != "first_counterexample"}],
                             fieldnames=["family", "formula", "checked", "failed"]))
    else:
        out.write(f"{family.value} [{family.formula}; {family.parity.value}]: "
                  f"{checked - len(failures)} of {checked} hold")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    depth = FULL if args.depth == "full" else QUICK
    sections = []

    def progress(section):
        sections.append(section)
        if out.fmt == "text":
            mark = "ok" if section.ok else "FAIL"
            out.write(f"{section.name:16} {section.checked:6d} checked  {mark}")

    run_selftest(depth, progress)
    failed = [s for s in sections if not s.ok]
    if failed:
        bad = failed[0].failures[0]
        if isinstance(bad, tuple):
            counterexample = {"family": bad[0], "m": bad[1], "n": bad[2]}
        else:
            counterexample = rpt.record(bad, out.timing)
        out.write(rpt.dumps({"status": "failed", "section": failed[0].name,
                             "counterexample": counterexample}))
        return EXIT_FAIL
    if out.fmt != "text":
        out.write(rpt.dumps({"status": "passed", "depth": args.depth,
                             "checked": sum(s.checked for s in sections)}))
    else:
        out.write(f"selftest {args.depth}: all {sum(s.checked for s in sections)} checks passed")
    return EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "verify": cmd_verify,
    "sweep": cmd_sweep,
    "eval": cmd_eval,
    "algebraic": cmd_algebraic,
    "selftest": cmd_selftest,
}


def main(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Output(getattr(args, "format", "text"), not getattr(args, "no_timing", False), stdout)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"fibarctan {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FibArctanError as exc:
        print(f"fibarctan {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
