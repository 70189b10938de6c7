"""Command line: antipod count | construct | verify | bounds | search | segments.

Exit status is 0 on success, 1 when a check fails (oracles disagree, a
family fails its test, a suite entry fails) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys

from . import __version__
from .antipodality import ANTIPODAL, MODES, STRICT, count_pairs, difference_body_counts
from .bounds import MAX_SIDE_NOTES, bound_table
from .constructions import CONSTRUCTIONS, ConstructionError, build
from .geom import GeometryError
from .io import FormatError, atomic_write, read_config, read_family, report_to_dict, write_config, write_json
from .search import OBJECTIVES, SearchError, SearchTask, search_extremal
from .segments import family_test

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_params(text: str | None) -> dict:
    params = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"bad parameter {item!r}; use KEY=VALUE,KEY=VALUE")
        params[key.strip()] = value.strip()
    return params


def cmd_count(args) -> int:
    config = read_config(args.input)
    if args.in_affine_hull:
        config = config.reembed()
    modes = MODES if args.mode == "both" else (args.mode,)
    results = {}
    if args.oracle in ("lp", "both"):
        reports = {m: count_pairs(config, m) for m in modes}
        results["lp"] = {("a" if m == ANTIPODAL else "sa"): r.count for m, r in reports.items()}
        if args.certificates:
            write_json(args.certificates, {m: report_to_dict(r) for m, r in reports.items()})
    if args.oracle in ("diffbody", "both"):
        db = difference_body_counts(config)
        full = {"a": db.a, "sa": db.sa}
        results["diffbody"] = {k: full[k] for k in (("a" if m == ANTIPODAL else "sa") for m in modes)}
        results["diffbody"]["db_vertices"] = db.db_vertices
    for oracle, counts in results.items():
        print(f"{oracle}: " + ", ".join(f"{k} = {v}" for k, v in counts.items()))
    if len(results) == 2:
        keys = [k for k in results["lp"]]
        if any(results["lp"][k] != results["diffbody"][k] for k in keys):
            print("oracles disagree", file=sys.stderr)
            return CHECK_FAILED
        print("oracles agree")
    return OK


def cmd_construct(args) -> int:
    config = build(args.name, _parse_params(args.params))
    write_config(args.out, config)
    extra = ", ".join(f"{k} = {v}" for k, v in config.construction.items() if k in ("sa", "a", "db_vertices"))
    print(f"wrote {config.n} points in R^{config.dim} to {args.out}" + (f" ({extra})" if extra else ""))
    return OK


def cmd_verify(args) -> int:
    from .verify import SUITE, run_suite

    names = None if args.suite == "all" else [s.strip() for s in args.suite.split(",")]
    if names:
        unknown = [n for n in names if n not in SUITE]
        if unknown:
            raise UsageError(f"unknown suite entries {unknown}; known: {', '.join(SUITE)}")
    report = run_suite(names)
    for entry in report["entries"]:
        print(f"{'PASS' if entry['pass'] else 'FAIL'}  {entry['id']}: {entry['actual']}")
    s = report["summary"]
    print(f"{s['passed']}/{s['total']} entries pass")
    if args.report:
        write_json(args.report, report)
    return OK if s["failed"] == 0 else CHECK_FAILED


def cmd_bounds(args) -> int:
    if args.dmax < 2:
        raise UsageError("--dmax must be at least 2")
    rows = [r.as_dict() for r in bound_table(args.dmax)]
    if args.csv:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "k", "n", "lower", "upper", "exact", "provenance"])
        for r in rows:
            w.writerow([r["d"], r["k"], r["n"], r["lower"], r["upper"],
                        "" if r["exact"] is None else r["exact"], "; ".join(r["provenance"])])
        atomic_write(args.csv, buf.getvalue())
    print(json.dumps({"rows": rows, "max_side_notes": MAX_SIDE_NOTES}, indent=2))
    return OK


def cmd_search(args) -> int:
    try:
        task = SearchTask(args.d, args.n, args.mode, args.objective, args.budget, args.seed, args.restarts,
                          denominator_bound=args.denominator_bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = search_extremal(task)
    write_config(args.out, result.best_config)
    log = dict(result.as_dict(), task={"d": task.d, "n": task.n, "mode": task.mode, "objective": task.objective,
                                       "budget": task.budget, "seed": task.seed, "restarts": task.restarts,
                                       "target": task.target()})
    write_json(args.log or f"{args.out}.log.json", log)
    name = "a" if task.mode == ANTIPODAL else "sa"
    print(f"{name} = {result.best_value} (restart values {result.history}); wrote {args.out}")
    return OK


def cmd_segments(args) -> int:
    family = read_family(args.input)
    ok, pair = family_test(family, args.mode)
    if ok:
        print(f"all {family.n} segments pairwise {args.mode}")
        return OK
    print(f"not {args.mode}: segments {pair[0]} and {pair[1]} fail")
    return CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="antipod", description="Exact antipodal pair counts and constructions.")
    p.add_argument("--version", action="version", version=f"antipod {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count (strictly) antipodal pairs of a point file")
    c.add_argument("--input", required=True)
    c.add_argument("--mode", choices=MODES + ("both",), default="both")
    c.add_argument("--oracle", choices=("lp", "diffbody", "both"), default="both")
    c.add_argument("--certificates", help="write per-pair certificates (JSON)")
    c.add_argument("--in-affine-hull", action="store_true", help="re-embed into the affine hull first")
    c.set_defaults(func=cmd_count)

    c = sub.add_parser("construct", help="generate a named configuration")
    c.add_argument("--name", required=True, choices=sorted(CONSTRUCTIONS))
    c.add_argument("--params", default="", help="KEY=VALUE,KEY=VALUE")
    c.add_argument("--out", required=True)
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", help="run the acceptance suite")
    c.add_argument("--suite", default="all", help="'all' or comma-separated entry ids")
    c.add_argument("--report", help="write the JSON report here")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("bounds", help="table of lower/upper bounds")
    c.add_argument("--dmax", type=int, required=True)
    c.add_argument("--csv")
    c.set_defaults(func=cmd_bounds)

    c = sub.add_parser("search", help="annealing search for extremal configurations")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--mode", choices=MODES, default=STRICT)
    c.add_argument("--objective", choices=OBJECTIVES, default="minimize")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=100_000)
    c.add_argument("--restarts", type=int, default=8)
    c.add_argument("--denominator-bound", type=int, default=10**6)
    c.add_argument("--out", required=True)
    c.add_argument("--log", help="run log path (default: OUT.log.json)")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("segments", help="test a segment family")
    c.add_argument("--input", required=True)
    c.add_argument("--mode", choices=MODES, default=STRICT)
    c.set_defaults(func=cmd_segments)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, GeometryError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"antipod {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except (ConstructionError, SearchError) as exc:
        print(f"antipod {args.command}: {exc}", file=sys.stderr)
        return CHECK_FAILED


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
