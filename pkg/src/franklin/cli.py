"""Command line: ``franklin {table,norm,sweep,verify}``.

Exit status is 0 on success, 1 on a usage error and 2 when verification fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal, localcontext

from . import lebesgue, verification
from .splines import KnotConfig

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

CSV_FIELDS = ["N", "nu", "norm_decimal", "norm_num", "norm_den", "argmax_j", "below_gamma"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cell(args: tuple[int, int, int]) -> dict:
    N, nu, digits = args
    rep = lebesgue.projection_norm(KnotConfig.from_N(N, nu), digits)
    return {
        "N": N,
        "nu": nu,
        "norm_decimal": rep.decimal,
        "norm_num": str(rep.norm.numerator),
        "norm_den": str(rep.norm.denominator),
        "argmax_j": rep.argmax,
        "below_gamma": rep.below_gamma,
    }


def _map(fn, items, parallel: bool):
    if parallel and len(items) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(fn, items, chunksize=4))
    return [fn(x) for x in items]


def table_cells(n_max: int, digits: int = 8, parallel: bool = False) -> list[dict]:
    if n_max < 2:
        raise UsageError("--n-max must be at least 2")
    items = [(N, nu, digits) for N in range(2, n_max + 1) for nu in lebesgue.admissible_nus(N)]
    return _map(_cell, items, parallel)


def _csv_text(cells: list[dict], fields=CSV_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for c in cells:
        w.writerow({k: (str(v).lower() if isinstance(v, bool) else v) for k, v in c.items()})
    return buf.getvalue()


def format_table(cells: list[dict], fmt: str) -> str:
    if fmt == "csv":
        return _csv_text(cells)
    if fmt == "json":
        return json.dumps(cells, indent=2) + "\n"
    # text: one row per N, one column per nu, blanks where nu is not admissible
    n_max = max(c["N"] for c in cells)
    nu_max = max(c["nu"] for c in cells)
    by = {(c["N"], c["nu"]): c["norm_decimal"] for c in cells}
    width = max(len(v) for v in by.values())
    lines = ["N\\nu " + " ".join(f"{nu:>{width}}" for nu in range(nu_max + 1))]
    for N in range(2, n_max + 1):
        row = [by.get((N, nu), "").rjust(width) for nu in range(nu_max + 1)]
        lines.append(f"{N:>5} " + " ".join(row).rstrip())
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    cells = table_cells(args.n_max, args.digits, args.parallel)
    sys.stdout.write(format_table(cells, args.format))
    return EXIT_OK


def cmd_norm(args) -> int:
    try:
        cfg = KnotConfig(args.n, args.nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = lebesgue.projection_norm(cfg, args.digits)
    if args.format == "json":
        out = _cell((cfg.N, cfg.nu, args.digits))
        if args.verbose:
            out["kappas"] = [str(k) for k in rep.kappas]
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
        return EXIT_OK
    print(f"n = {cfg.n}, nu = {cfg.nu}, N = {cfg.N}")
    print(f"norm = {rep.norm}")
    print(f"decimal = {rep.decimal}")
    print(f"argmax j = {rep.argmax}")
    print(f"below gamma: {'yes' if rep.below_gamma else 'no'}")
    if args.verbose:
        for j, k in enumerate(rep.kappas):
            print(f"  kappa({j}) = {lebesgue.decimal_string(k, args.digits)}  [{k}]")
    return EXIT_OK


def _sweep_row(args: tuple[int, int]) -> tuple[int, str, str]:
    n, nu = args
    rep = lebesgue.projection_norm(KnotConfig(n, nu))
    with localcontext() as ctx:
        ctx.prec = 60
        gap = abs(lebesgue.to_decimal(rep.norm, 60) - lebesgue.GAMMA.to_decimal(60))
        ctx.prec = 30
        gap = +gap
    return rep.cfg.N, rep.decimal, f"{gap:.29E}"


def cmd_sweep(args) -> int:
    nu, n_max = args.nu, args.n_max
    if nu < 0 or n_max < nu + 2:
        raise UsageError("need --nu >= 0 and --n-max >= nu + 2")
    items = [(n, nu) for n in range(max(2, nu + 1), n_max - nu + 1)]
    rows = _map(_sweep_row, items, args.parallel)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "norm_decimal", "gap_to_gamma"])
    w.writerows(rows)
    sys.stdout.write(buf.getvalue())
    if rows:
        print(f"final gap at N={rows[-1][0]}: {Decimal(rows[-1][2]):.6E}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verification.run(args.level)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name}  ({r.seconds:.1f}s)")
        if not r.passed:
            print(json.dumps({"check": r.name, "counterexample": r.counterexample}, indent=2))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="franklin", description="Exact norms of periodic linear spline projections.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="reproduce the table of norms for N = 2..n_max")
    t.add_argument("--n-max", type=int, default=20)
    t.add_argument("--format", choices=["csv", "json", "text"], default="text")
    t.add_argument("--digits", type=int, default=8)
    t.add_argument("--parallel", action="store_true")
    t.set_defaults(func=cmd_table)

    n = sub.add_parser("norm", help="norm for a single (n, nu)")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--nu", type=int, required=True)
    n.add_argument("--verbose", action="store_true")
    n.add_argument("--format", choices=["text", "json"], default="text")
    n.add_argument("--digits", type=int, default=8)
    n.set_defaults(func=cmd_norm)

    s = sub.add_parser("sweep", help="norms and distance to gamma for fixed nu")
    s.add_argument("--nu", type=int, default=1)
    s.add_argument("--n-max", type=int, default=40)
    s.add_argument("--parallel", action="store_true")
    s.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the property suites")
    v.add_argument("--level", choices=["quick", "full"], default="quick")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "digits", 8) < 1:
        print("franklin: error: --digits must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"franklin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
