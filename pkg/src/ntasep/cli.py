"""Command-line front end.

Exit codes: 0 success, 2 verification mismatch, 3 size budget exceeded,
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import golden
from .combi_r import r_apply, ybe_check, ybe_random, ybe_sweep
from .markov import KernelDimensionError, is_proportional, kernel_steady
from .mpf import ORDERS, build_X, build_Xhat, hat_check, mpf_steady
from .multiline import BudgetExceeded, SteadyVector, conjecture_check, fm_steady
from .quantum_r import rmatrix_full, specialize_q0, spectral_ybe_check, table_as_text
from .words import ChainError, SectorError, Word, check_basic, config_text

EXIT_OK, EXIT_MISMATCH, EXIT_BUDGET, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _mult(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse multiplicity {text!r}")


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "tsv" and isinstance(obj, SteadyVector):
        for k, v in sorted(obj.weights.items()):
            print(f"{config_text(k)}\t{v}")
        return
    if isinstance(obj, SteadyVector):
        obj = obj.as_json()
    print(json.dumps(obj, sort_keys=True, indent=1))


def cmd_steady(args) -> int:
    m = check_basic(_mult(args.mult))
    runners = {
        "fm": lambda: fm_steady(m, args.budget),
        "mpf": lambda: mpf_steady(m, args.budget),
        "kernel": lambda: kernel_steady(m) if args.budget is None else kernel_steady(m, args.budget),
    }
    if args.method != "all":
        _emit(runners[args.method]().normalized(), args.format)
        return EXIT_OK
    vecs = {name: run() for name, run in runners.items()}
    ref = vecs["fm"]
    bad = [name for name, v in vecs.items() if is_proportional(v.weights, ref.weights) is None]
    if bad:
        print(f"methods disagree with fm: {', '.join(bad)}", file=sys.stderr)
        return EXIT_MISMATCH
    out = ref.normalized()
    out.method = "all"
    _emit(out, args.format)
    return EXIT_OK


def _reports_exit(reports) -> int:
    _emit({"checks": [r.as_dict() for r in reports], "ok": all(r.ok for r in reports)})
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


def cmd_verify(args) -> int:
    reports = golden.run_all()
    if args.golden:
        reports.append(_conjecture_against_golden())
    return _reports_exit(reports)


def _conjecture_against_golden():
    from .combi_r import CheckReport

    rep = CheckReport("carrier conjecture report")
    want = golden.load("conjecture_report.json")
    got = golden.conjecture_report()
    rep.checked = len(want)
    if got != want:
        rep.failures.append({"entries": len(got), "expected": len(want)})
    return rep


def cmd_ybe(args) -> int:
    if args.quantum:
        reps = [spectral_ybe_check(k, l, m, args.L) for k in (1, 2) for l in (1, 2) for m in (1, 2)]
        return _reports_exit(reps)
    if args.samples:
        return _reports_exit([ybe_random(args.L, args.samples, args.seed)])
    if None not in (args.k, args.l, args.m):
        return _reports_exit([ybe_check(args.k, args.l, args.m, args.L)])
    return _reports_exit([ybe_sweep(args.L)])


def cmd_hat(args) -> int:
    rep = hat_check(args.n)
    failing = {tuple(p) for p in rep["failures"]}
    rep["matrix"] = [
        "".join("x" if (a, b) in failing else "." for b in range(args.n + 1)) for a in range(args.n + 1)
    ]
    _emit(rep)
    return EXIT_OK if rep["ok"] else EXIT_MISMATCH


def cmd_rmat(args) -> int:
    table = rmatrix_full(args.l, args.m, args.L)
    if args.q0:
        image = specialize_q0(table)
        _emit({f"{i},{j}": f"{b},{a}" for (i, j), (b, a) in sorted(image.items(), key=lambda kv: str(kv[0]))})
    else:
        _emit(table_as_text(table))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    m = check_basic(_mult(args.mult))
    rs = [args.r] if args.r else range(1, sum(m))
    reports = [conjecture_check(m, r, args.budget) for r in rs]
    _emit(reports)
    return EXIT_OK if all(r["singleton"] and r["stationary"] for r in reports) else EXIT_MISMATCH


def cmd_apply_r(args) -> int:
    try:
        i, j = Word.parse(args.i), Word.parse(args.j)
    except ValueError as exc:
        raise UsageError(str(exc))
    if len(i) != len(j):
        raise UsageError("--i and --j must have the same length")
    b, a = r_apply(i, j)
    print(f"{b} {a}")
    return EXIT_OK


def cmd_xop(args) -> int:
    if not 0 <= args.i <= args.n:
        raise UsageError(f"--i must lie in 0..{args.n}")
    op = (build_Xhat if args.hat else build_X)(args.i, args.n, args.order)
    print(op)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = Parser(prog="ntasep", description="Exact steady states of the multispecies TASEP on a ring.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=Parser)

    s = sub.add_parser("steady", help="steady-state weights of a sector")
    s.add_argument("--mult", required=True, help="multiplicities m_0,...,m_n, e.g. 1,1,1")
    s.add_argument("--method", choices=["fm", "mpf", "kernel", "all"], default="fm")
    s.add_argument("--format", choices=["json", "tsv"], default="json")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_steady)

    v = sub.add_parser("verify", help="check the shipped worked examples")
    v.add_argument("--golden", action="store_true", help="also compare the carrier report with its frozen copy")
    v.set_defaults(func=cmd_verify)

    y = sub.add_parser("ybe", help="Yang-Baxter checks")
    y.add_argument("--L", type=int, required=True)
    y.add_argument("--all", action="store_true", help="exhaustive over all weights (default)")
    y.add_argument("--k", type=int)
    y.add_argument("--l", type=int)
    y.add_argument("--m", type=int)
    y.add_argument("--samples", type=int, default=0)
    y.add_argument("--seed", type=int, default=0)
    y.add_argument("--quantum", action="store_true", help="spectral version on weights 1 and 2")
    y.set_defaults(func=cmd_ybe)

    h = sub.add_parser("hat", help="hat relation for the operators X_i")
    h.add_argument("--n", type=int, required=True)
    h.set_defaults(func=cmd_hat)

    r = sub.add_parser("rmat", help="quantum R matrix table")
    r.add_argument("--l", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--L", type=int, required=True)
    r.add_argument("--q0", action="store_true", help="specialize to q=0, z=1")
    r.set_defaults(func=cmd_rmat)

    c = sub.add_parser("conjecture", help="carrier single-image test")
    c.add_argument("--mult", required=True)
    c.add_argument("--r", type=int, default=0, help="carrier weight; all weights when omitted")
    c.add_argument("--budget", type=int, default=None)
    c.set_defaults(func=cmd_conjecture)

    a = sub.add_parser("apply-r", help="combinatorial R on a pair of words")
    a.add_argument("--i", required=True)
    a.add_argument("--j", required=True)
    a.set_defaults(func=cmd_apply_r)

    x = sub.add_parser("xop", help="print X_i or its hat version")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--i", type=int, required=True)
    x.add_argument("--hat", action="store_true")
    x.add_argument("--order", choices=ORDERS, default="row")
    x.set_defaults(func=cmd_xop)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SectorError, ChainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except KernelDimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
