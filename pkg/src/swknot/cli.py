"""Command line front end.

Exit status: 0 on success, 1 on domain errors (bad knot data, non-fibered Δ
without ``--force``), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .classify import Outcome, classify, classify_delta, dolgachev_series
from .errors import InternalConsistencyError, SwknotError
from .knots import (
    BraidWord,
    KnotInput,
    SeifertMatrix,
    TableRow,
    builtin_knot,
    builtin_table,
    is_fibered_candidate,
    match_torus,
    read_knot_table,
)
from .laurent import LaurentPoly
from .swseries import genus, sw_small_perturbation, wall_crossing_check

TABLE_ENV = "SWKNOT_TABLE"


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", metavar="WORD", help='signed generator indices, e.g. "1 -2 1 -2"')
    src.add_argument("--seifert", metavar="JSON", help='Seifert matrix, e.g. "[[-1,1],[0,-1]]"')
    src.add_argument("--delta", metavar="POLY", help='Alexander polynomial, e.g. "t^-1 - 1 + t"')
    src.add_argument("--knot", metavar="NAME", help="name from the built-in knot table")
    p.add_argument("--strands", type=int, help="strand count for --braid (default: max index + 1)")
    p.add_argument("--name", help="label used in the output")


def _knot_from_args(args) -> KnotInput:
    if args.strands is not None and args.braid is None:
        raise UsageError("--strands only applies to --braid")
    if args.knot is not None:
        knot = builtin_knot(args.knot)
        return knot if args.name is None else KnotInput(args.name, knot.braid, knot.seifert, knot.delta)
    name = args.name or "input"
    if args.braid is not None:
        return KnotInput(name, braid=BraidWord.parse(args.braid, args.strands))
    if args.seifert is not None:
        return KnotInput(name, seifert=SeifertMatrix.parse(args.seifert))
    return KnotInput(name, delta=LaurentPoly.parse(args.delta))


def _screen(delta: LaurentPoly, force: bool) -> None:
    if not force and not is_fibered_candidate(delta):
        raise SwknotError(
            f"not fibered-screened: leading coefficient of {delta} is "
            f"{delta.leading_coefficient()}, not +-1 (use --force to compute anyway)"
        )


def cmd_alex(args, out) -> int:
    knot = _knot_from_args(args)
    delta = knot.alexander()
    if args.json:
        out.write(_dumps({"name": knot.name, "alexander": str(delta),
                          "fibered_candidate": is_fibered_candidate(delta)}) + "\n")
    else:
        out.write(f"{delta}\n")
    return 0


def cmd_sw(args, out) -> int:
    knot = _knot_from_args(args)
    delta = knot.alexander()
    _screen(delta, args.force)
    sw = sw_small_perturbation(delta, require_monic=not args.force)
    if args.json:
        out.write(_dumps({"name": knot.name, "alexander": str(delta), "sw": sw.to_records()}) + "\n")
    else:
        out.write(f"{sw.pretty()}\n")
    return 0


def cmd_classify(args, out) -> int:
    knot = _knot_from_args(args)
    delta = knot.alexander()
    _screen(delta, args.force)
    verdict = classify_delta(knot.name, delta)
    if args.json:
        out.write(_dumps(verdict.to_json()) + "\n")
    else:
        out.write(verdict.to_text() + "\n")
    return 0


def cmd_wallcross(args, out) -> int:
    knot = _knot_from_args(args)
    delta = knot.alexander()
    _screen(delta, False)
    window = args.window if args.window is not None else 4 * genus(delta) + 5
    if window < delta.span():
        raise UsageError(f"--window must be at least the degree span {delta.span()} of {delta}")
    report = wall_crossing_check(delta, window)
    if args.json:
        out.write(_dumps({
            "name": knot.name,
            "alexander": str(delta),
            "window": report.window,
            "ok": report.ok,
            "rows": [{"lambda": lam, "plus": p, "minus": m, "difference": p - m}
                     for lam, p, m in report.rows],
        }) + "\n")
    else:
        out.write(f"{'lambda':>7} {'plus':>6} {'minus':>6} {'diff':>5}\n")
        for lam, p, m in report.rows:
            out.write(f"{lam:>7} {p:>6} {m:>6} {p - m:>5}\n")
        out.write(report.summary() + "\n")
    return 0 if report.ok else 1


def cmd_torus_match(args, out) -> int:
    knot = _knot_from_args(args)
    delta = knot.alexander()
    pq = match_torus(delta)
    if args.json:
        out.write(_dumps({"name": knot.name, "alexander": str(delta),
                          "p": pq[0] if pq else None, "q": pq[1] if pq else None}) + "\n")
    else:
        out.write(f"T({pq[0]},{pq[1]})\n" if pq else "no-match\n")
    return 0


def cmd_dolgachev(args, out) -> int:
    sw = dolgachev_series(args.p, args.q)
    if args.json:
        out.write(_dumps({"p": args.p, "q": args.q, "sw": sw.to_records()}) + "\n")
    else:
        out.write(f"{sw.pretty()}\n")
    return 0


# ---------------------------------------------------------------------------
# batch

SUMMARY_KEYS = {
    Outcome.RATIONAL_OR_RULED: "rational_or_ruled",
    Outcome.DOLGACHEV: "dolgachev",
    Outcome.MINIMAL_NON_COMPLEX: "minimal_non_complex",
    Outcome.NOT_APPLICABLE: "not_applicable",
}


def process_row(row: TableRow, force: bool = False) -> dict:
    """One JSON record for a table row; errors are captured, never raised."""
    try:
        knot = row.to_knot()
        delta = knot.alexander()
        _screen(delta, force)
        return classify(knot).to_json()
    except (SwknotError, InternalConsistencyError, OverflowError) as exc:
        return {"name": row.name, "error": str(exc)}


def _process_star(job):
    return process_row(*job)


def run_batch(rows: list[TableRow], out, *, force: bool = False, jobs: int = 1) -> dict:
    summary = {"total": 0, "rational_or_ruled": 0, "dolgachev": 0,
               "minimal_non_complex": 0, "not_applicable": 0, "errors": 0}
    work = [(r, force) for r in rows]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = pool.map(_process_star, work, chunksize=4)
            _drain(records, out, summary)
    else:
        _drain(map(_process_star, work), out, summary)
    out.write(_dumps(summary) + "\n")
    out.flush()
    return summary


def _drain(records, out, summary) -> None:
    # map() yields in input order, so output order never depends on scheduling
    for rec in records:
        summary["total"] += 1
        if "error" in rec:
            summary["errors"] += 1
        else:
            summary[SUMMARY_KEYS[Outcome(rec["outcome"])]] += 1
        out.write(_dumps(rec) + "\n")
        out.flush()


def cmd_batch(args, out) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    path = args.csv or os.environ.get(TABLE_ENV)
    rows = read_knot_table(path) if path else builtin_table()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            summary = run_batch(rows, fh, force=args.force, jobs=args.jobs)
        out.write(_dumps(summary) + "\n")
    else:
        run_batch(rows, out, force=args.force, jobs=args.jobs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swknot",
        description="Seiberg-Witten invariants of knot-surgered elliptic surfaces E(1)_K.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("alex", help="normalized Alexander polynomial")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("sw", help="small-perturbation SW invariant SW0")
    _add_source(p)
    p.add_argument("--force", action="store_true", help="skip the fiberedness screen")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("classify", help="rational/ruled, Dolgachev, or minimal non-complex")
    _add_source(p)
    p.add_argument("--force", action="store_true",
                   help="emit a NOT_APPLICABLE verdict with data for non-fibered input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("wallcross", help="check the wall-crossing formula on the chamber series")
    _add_source(p)
    p.add_argument("--window", type=int, help="largest |lambda| checked (default 4g + 5)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wallcross)

    p = sub.add_parser("torus-match", help="torus knot with the same Alexander polynomial")
    _add_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_torus_match)

    p = sub.add_parser("dolgachev", help="SW0 of the Dolgachev surface E(1;p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dolgachev)

    p = sub.add_parser("batch", help="classify every row of a knot table (JSON lines)")
    p.add_argument("csv", nargs="?", help=f"CSV path (default: ${TABLE_ENV} or the built-in table)")
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_batch)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"swknot {args.command}: error: {exc}\n")
        return 2
    except (SwknotError, InternalConsistencyError, OverflowError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
