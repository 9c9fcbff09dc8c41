"""Command-line front end: ``osphahn {poly,spectrum,overlap,verify}``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from . import dualhahn as dh
from .errors import OspHahnError
from .overlaps import overlap_matrix, overlap_quadrature_matrix
from .spinor import CartesianState, polar_states_at_level

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def emit(command: str, params: dict, rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    rows = [{k: int(v) if isinstance(v, bool) else v for k, v in r.items()} for r in rows]
    if fmt == "json":
        json.dump({"schema_version": SCHEMA_VERSION, "command": command, "params": params, "rows": rows},
                  out, allow_nan=False)
        out.write("\n")
        return
    fields = list(rows[0]) if rows else []
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for r in rows:
        writer.writerow([_fmt(r[f]) for f in fields])


def cmd_poly(args) -> int:
    p = dh.DualHahnParams(args.xi, args.zeta, args.N)
    if args.n is not None:
        p.check_index(args.n)
    params = {"xi": args.xi, "zeta": args.zeta, "N": args.N}
    if args.x is not None:
        degrees = [args.n] if args.n is not None else range(args.N + 1)
        rows = [{"n": n, "x": args.x, "value": dh.eval_recurrence(n, args.x, p)} for n in degrees]
        params["x"] = args.x
    else:
        data = dh.OrthogonalityData.from_params(p)
        rows = []
        for s in range(args.N + 1):
            row = {"s": s, "x": data.grid[s], "weight": data.weights[s], "norm": data.norms[s]}
            if args.n is not None:
                row["value"] = dh.eval_recurrence(args.n, data.grid[s], p)
            rows.append(row)
    if args.n is not None:
        params["n"] = args.n
    emit("poly", params, rows, args.format)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.levels < 0:
        raise UsageError("--levels must be >= 0")
    rows = []
    for N in range(args.levels + 1):
        cart = [CartesianState(m, N - m, args.k1, args.k2) for m in range(N + 1)]
        polar = polar_states_at_level(N, args.k1, args.k2)
        energies = {c.energy for c in cart}
        rows.append({"N": N, "energy": cart[0].energy, "degeneracy": len(cart), "polar_count": len(polar),
                     "match": len(polar) == len(cart) and {p.energy for p in polar} == energies})
    emit("spectrum", {"k1": args.k1, "k2": args.k2, "levels": args.levels}, rows, args.format)
    return EXIT_OK


def cmd_overlap(args) -> int:
    if args.N < 0:
        raise UsageError("--N must be >= 0")
    closed = overlap_matrix(args.N, args.k1, args.k2).entries
    quad = None
    if args.method in ("quadrature", "both"):
        quad = overlap_quadrature_matrix(args.N, args.k1, args.k2, nodes=args.nodes).entries
    rows = []
    for z in range(args.N + 1):
        for m in range(args.N + 1):
            row = {"z": z, "m": m}
            if args.method in ("closed", "both"):
                row["closed"] = float(closed[z, m])
            if quad is not None:
                row["quadrature"] = float(quad[z, m])
            rows.append(row)
    emit("overlap", {"N": args.N, "k1": args.k1, "k2": args.k2, "method": args.method}, rows, args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import CHECK_NAMES, run_suite

    only = args.only or None
    if only:
        bad = [n for n in only if n not in CHECK_NAMES]
        if bad:
            raise UsageError(f"unknown check {bad[0]!r}; choose from {', '.join(CHECK_NAMES)}")
    reports = run_suite(only, workers=args.workers)
    rows = [{"check": r.name, "params": json.dumps(r.params, sort_keys=True), "defect": r.defect,
             "tolerance": r.tolerance, "passed": r.passed, "runtime": r.runtime} for r in reports]
    emit("verify", {"only": only or list(CHECK_NAMES)}, rows, args.format)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(r.summary(), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="osphahn", description="osp(1|2) Clebsch-Gordan toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        return p

    p = with_format(sub.add_parser("poly", help="dual -1 Hahn values, grid, weights, norms"))
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--zeta", type=float, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--grid", action="store_true", help="tabulate on the orthogonality grid (default)")
    g.add_argument("--x", type=float)
    p.set_defaults(func=cmd_poly)

    p = with_format(sub.add_parser("spectrum", help="energy levels and degeneracies"))
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--levels", type=int, default=5)
    p.set_defaults(func=cmd_spectrum)

    p = with_format(sub.add_parser("overlap", help="overlap matrix at level N"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--method", choices=("closed", "quadrature", "both"), default="closed")
    p.add_argument("--nodes", type=int, default=160)
    p.set_defaults(func=cmd_overlap)

    p = with_format(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--only", action="append", help="restrict to a named suite (repeatable)")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except RuntimeError as exc:
        print(f"osphahn {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, OspHahnError, ValueError, IndexError) as exc:
        print(f"osphahn {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
