"""Command-line surface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource
limit.  All numeric output is plain decimal (arbitrary precision, no
scientific notation); JSON carries integers as strings so 64-bit-limited
consumers survive the larger counts.  Results of expensive commands are
cached under the directory named by ``CSGAMES_CACHE_DIR`` (default
``~/.cache/csgames``); ``--no-cache`` bypasses the cache entirely and must
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import acceptance, cache, ehrhart, formulas, subcases
from .core import format_game
from .enumeration import count_all_games, count_typed, enumerate_typed, tabulate_games
from .errors import ResourceLimitError
from .polytope import (
    build_bigm,
    build_compact_t2,
    count_lattice_points,
    enumerate_lattice_points,
    is_rationally_feasible,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cached_text(command: str, params: dict, no_cache: bool, compute) -> str:
    if not no_cache:
        hit = cache.get(command, params)
        if isinstance(hit, str):
            return hit
    text = compute()
    if not no_cache:
        cache.put(command, params, text)
    return text


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_enumerate(args) -> int:
    if args.list:
        def compute() -> str:
            lines = []
            ts = [args.t] if args.t else range(1, args.n + 1)
            for t in ts:
                for game in enumerate_typed(args.n, t, args.r):
                    lines.append(format_game(game))
            return "".join(line + "\n" for line in lines)

        params = {"n": args.n, "t": args.t, "r": args.r, "list": True}
        _emit(_cached_text("enumerate", params, args.no_cache, compute), args.out)
        return EXIT_OK

    def compute() -> str:
        if args.t is None:
            if args.r is not None:
                total = sum(count_typed(args.n, t, args.r) for t in range(1, args.n + 1))
            else:
                total = count_all_games(args.n, jobs=max(args.jobs, 1))
        else:
            total = count_typed(args.n, args.t, args.r, jobs=max(args.jobs, 1))
        return f"{total}\n"

    params = {"n": args.n, "t": args.t, "r": args.r, "list": False}
    _emit(_cached_text("enumerate", params, args.no_cache, compute), args.out)
    return EXIT_OK


def _cmd_tabulate(args) -> int:
    def compute() -> str:
        tab = tabulate_games(args.n)
        items = tab.sorted_items()
        if args.format == "json":
            payload = {
                "n": args.n,
                "counts": [
                    {"t": t, "r": r, "count": str(c)} for (t, r), c in items
                ],
                "total": str(tab.total()),
            }
            return _json_text(payload)
        rows = [[str(args.n), str(t), str(r), str(c)] for (t, r), c in items]
        return _csv_text(["n", "t", "r", "count"], rows)

    params = {"n": args.n, "format": args.format}
    _emit(_cached_text("tabulate", params, args.no_cache, compute), args.out)
    return EXIT_OK


def _cmd_formula(args) -> int:
    if args.action == "list":
        lines = [str(entry) for entry in formulas.catalog_entries()]
        _emit("".join(line + "\n" for line in lines), args.out)
        return EXIT_OK
    if args.id is None:
        raise UsageError(f"formula {args.action} requires --id")
    if args.action == "show":
        if args.id not in formulas.quasi_params():
            raise UsageError(f"only the stored quasi-polynomials can be shown, not {args.id!r}")
        _emit(formulas.quasi_polynomial(args.id).pretty() + "\n", args.out)
        return EXIT_OK
    if args.n is None:
        raise UsageError("formula eval requires --n")
    try:
        value = formulas.catalog_eval(args.id, args.n, t=args.t, r=args.r)
    except ValueError as err:
        raise UsageError(str(err)) from err
    _emit(f"{value}\n", args.out)
    return EXIT_OK


def _cmd_ilp(args) -> int:
    if args.model == "compact":
        if args.t not in (None, 2):
            raise UsageError("the compact model is two-class only (--t 2)")
        system = build_compact_t2(args.n, args.r)
    else:
        if args.t is None:
            raise UsageError("--t is required for the big-M model")
        system = build_bigm(args.n, args.t, args.r)
    if args.dump:
        _emit(system.to_lp_text() + "\n", args.out)
        return EXIT_OK
    if args.feasible:
        _emit(("feasible" if is_rationally_feasible(system) else "infeasible") + "\n", args.out)
        return EXIT_OK
    if args.list:
        lines = [
            json.dumps({k: str(v) for k, v in point.items()}, sort_keys=True)
            for point in enumerate_lattice_points(system)
        ]
        _emit("".join(line + "\n" for line in lines), args.out)
        return EXIT_OK

    def compute() -> str:
        return f"{count_lattice_points(system)}\n"

    params = {"model": args.model, "n": args.n, "t": args.t, "r": args.r}
    _emit(_cached_text("ilp-count", params, args.no_cache, compute), args.out)
    return EXIT_OK


def _cmd_subcases(args) -> int:
    def compute() -> str:
        tuples = subcases.enumerate_subcases(args.t, args.r)
        if args.n is not None:
            rows = [
                [subcases.format_subcase(tp), str(count_lattice_points(subcases.subcase_system(tp, n=args.n)))]
                for tp in tuples
            ]
            return _csv_text(["subcase", f"count_n{args.n}"], rows)
        if args.list:
            if args.format == "json":
                return "".join(subcases.subcase_to_json(tp) + "\n" for tp in tuples)
            return "".join(subcases.format_subcase(tp) + "\n" for tp in tuples)
        return f"{len(tuples)}\n"

    params = {"t": args.t, "r": args.r, "n": args.n, "list": args.list, "format": args.format}
    _emit(_cached_text("subcases", params, args.no_cache, compute), args.out)
    return EXIT_OK


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    value = int(text)
    return range(value, value + 1)


def _cmd_fit(args) -> int:
    if args.demo:
        samples = ehrhart.SampleSet.from_pairs(
            [(n, ehrhart.demo_polytope_count(n)) for n in _parse_range(args.samples)],
            "lattice",
        )
    else:
        if args.t is None or args.r is None:
            raise UsageError("fit requires --demo or both --t and --r")
        samples = ehrhart.sample_counts(
            args.t, args.r, _parse_range(args.samples), use_cache=not args.no_cache
        )
    fitted = ehrhart.fit_quasi_polynomial(samples, args.degree, args.period)
    if args.emit == "json":
        payload = {
            "degree": fitted.degree,
            "period": fitted.period,
            "coefficients": [
                {"power": fitted.degree - i, "entries": [str(e) for e in c.entries]}
                for i, c in enumerate(fitted.coefficients)
            ],
        }
        _emit(_json_text(payload), args.out)
    else:
        _emit(fitted.pretty() + "\n", args.out)
    return EXIT_OK


def _cmd_maxr(args) -> int:
    from .core import max_shift_minimal

    _emit(f"{max_shift_minimal(args.n)}\n", args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = acceptance.run_suite(args.suite)
    lines = [res.line() for res in results]
    failures = [res for res in results if not res.passed]
    summary = f"{len(results) - len(failures)}/{len(results)} checks passed"
    _emit("".join(line + "\n" for line in lines) + summary + "\n", args.out)
    return EXIT_VERIFY if failures else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="FILE", default=None)
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--jobs", type=int, default=1, metavar="K")

    parser = argparse.ArgumentParser(
        prog="csgames",
        description="Exact enumeration workbench for complete simple games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="count or list games")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", default=True)
    group.add_argument("--list", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("tabulate", parents=[common], help="counts by (t, r)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_tabulate)

    p = sub.add_parser("formula", parents=[common], help="formula catalog")
    p.add_argument("action", choices=("list", "eval", "show"))
    p.add_argument("--id", default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("ilp", parents=[common], help="integer-point models")
    p.add_argument("--model", choices=("bigm", "compact"), default="bigm")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count", action="store_true", default=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--feasible", action="store_true")
    p.set_defaults(fn=_cmd_ilp)

    p = sub.add_parser("subcases", parents=[common], help="case-split tuples")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="also count games per tuple at this n")
    p.add_argument("--count", action="store_true", default=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=_cmd_subcases)

    p = sub.add_parser("fit", parents=[common], help="fit a counting quasi-polynomial")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--demo", action="store_true", help="fit the demo polytope dilations")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--period", type=int, required=True)
    p.add_argument("--samples", required=True, metavar="A..B")
    p.add_argument("--emit", choices=("pretty", "json"), default="pretty")
    p.set_defaults(fn=_cmd_fit)

    p = sub.add_parser("maxr", parents=[common], help="largest possible row count")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_maxr)

    p = sub.add_parser("verify", parents=[common], help="run a named check suite")
    p.add_argument("--suite", default="all", choices=acceptance.suite_names())
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
