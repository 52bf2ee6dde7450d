"""Command line entry point: ``thetala <command> ...``.

Exit codes: 0 success, 1 invalid labeling (or a failed cross-check),
2 usage error, 3 not 2-chromatic / no witness / no subset.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .ap import NotFound, OutOfRange, odd_subset_with_sum
from .core import ThetaError, dumps_labeling, format_lengths, labeling_from_dict, make_theta, parse_lengths, to_dot
from .constructor import NotTwo, construct
from .feasibility import classify_family, enumerate_family_members, two_color_targets
from .search import cross_check, exists_two_coloring
from .verifier import verify

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_NOT_TWO = 0, 1, 2, 3

ATLAS_COLUMNS = ["lengths", "s", "m", "family", "l", "t", "x", "y", "status"]


class UsageError(Exception):
    pass


def _graph(text: str):
    try:
        return make_theta(parse_lengths(text))
    except ThetaError as exc:
        raise UsageError(f"bad lengths {text!r}: {exc}") from exc


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# -- commands --------------------------------------------------------------

def cmd_classify(args) -> int:
    cls = classify_family(_graph(args.lengths))
    print(_dump(cls.to_dict()))
    return EXIT_OK if cls.is_two else EXIT_NOT_TWO


def cmd_construct(args) -> int:
    g = _graph(args.lengths)
    try:
        f, trace = construct(g)
    except NotTwo as exc:
        print(_dump(exc.classification.to_dict()))
        return EXIT_NOT_TWO
    report = verify(g, f, expected=(trace.x, trace.y)) if args.verify else None
    if args.format == "dot":
        _emit(to_dot(g, f).rstrip("\n"), args.out)
    else:
        extra = {"trace": trace.to_dict()}
        if report is not None:
            extra["report"] = report.to_dict()
        _emit(json.dumps({**json.loads(dumps_labeling(g, f)), **extra}, sort_keys=True), args.out)
    if report is not None and not (report.valid and report.matches_targets):
        return EXIT_INVALID
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        data = json.loads(Path(args.file).read_text())
        g, f = labeling_from_dict(data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read labeling from {args.file}: {exc}") from exc
    expected = None
    if args.expect:
        parts = [int(v) for v in args.expect.split(",")]
        if len(parts) != 2:
            raise UsageError("--expect takes X,Y")
        expected = tuple(parts)
    report = verify(g, f, expected=expected)
    print(_dump(report.to_dict()))
    if report.status == "invalid":
        return EXIT_INVALID
    if report.status == "valid-not-2" or report.matches_targets is False:
        return EXIT_NOT_TWO
    return EXIT_OK


def cmd_decide2(args) -> int:
    res = exists_two_coloring(_graph(args.lengths), prune=not args.no_prune, count_all=args.count)
    print(_dump(res.to_dict()))
    return EXIT_OK if res.found else EXIT_NOT_TWO


def cmd_cross_check(args) -> int:
    if args.max_m < 2:
        raise UsageError("--max-m must be at least 2")
    rep = cross_check(args.max_m, brute_max_m=args.brute_max_m, prune=not args.no_prune)
    print(f"{'lengths':<28} {'m':>3} {'classify':>8} {'search':>6} {'brute':>5}  result")
    for row in rep.rows:
        brute = "-" if row.brute is None else str(row.brute)
        print(f"{format_lengths(row.graph.lengths):<28} {row.graph.m:>3} "
              f"{'yes' if row.classifier else 'no':>8} {'yes' if row.search else 'no':>6} "
              f"{brute:>5}  {'pass' if row.agrees else 'FAIL'}")
    print(f"{len(rep.rows)} graphs, {len(rep.disagreements)} disagreements, "
          f"{len(rep.positives)} with a 2-coloring")
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_subset(args) -> int:
    try:
        sel = odd_subset_with_sum(args.n, args.delta)
    except (OutOfRange, NotFound) as exc:
        print(_dump({"n": args.n, "delta": args.delta, "B": None, "error": str(exc)}))
        return EXIT_NOT_TWO
    print(_dump({"n": args.n, "delta": args.delta, "B": sorted(sel.chosen, reverse=True)}))
    return EXIT_OK


def _atlas_record(lengths: tuple[int, ...]) -> dict:
    g = make_theta(lengths)
    f, trace = construct(g)
    targets = two_color_targets(g)
    report = verify(g, f, expected=(targets.x, targets.y))
    ok = report.valid and report.matches_targets and report.color_count == 2
    return {
        "lengths": list(g.lengths),
        "s": g.s,
        "m": g.m,
        "family": trace.family,
        "params": dict(trace.params),
        "x": targets.x,
        "y": targets.y,
        "status": "valid-2-colors" if ok else report.status,
        "paths": [list(p) for p in f.per_path],
        "trace": {k: trace.to_dict()[k] for k in ("B", "gamma1", "gamma2", "exception_table", "recipe", "flagged")},
    }


def atlas_records(max_size: int, threads: int = 1) -> list[dict]:
    graphs = [g.lengths for g, _ in enumerate_family_members(max_size)]
    if threads > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_atlas_record, graphs, chunksize=8))
    return [_atlas_record(ls) for ls in graphs]


def cmd_atlas(args) -> int:
    threads = args.threads or int(os.environ.get("THETA_ATLAS_THREADS", "1") or 1)
    records = atlas_records(args.max_size, max(1, threads))
    out = Path(args.out)
    rec_dir = out / "records"
    rec_dir.mkdir(parents=True, exist_ok=True)
    with open(out / "index.csv", "w", newline="") as fh:
        writer = csv.writer(fh, delimiter=";", lineterminator="\n")
        writer.writerow(ATLAS_COLUMNS)
        for k, rec in enumerate(records):
            name = f"{k:04d}_{rec['family']}.json"
            rec["file"] = f"records/{name}"
            (rec_dir / name).write_text(json.dumps(rec, sort_keys=True) + "\n")
            p = rec["params"]
            writer.writerow([format_lengths(rec["lengths"]), rec["s"], rec["m"], rec["family"],
                             p.get("l", ""), p.get("t", ""), rec["x"], rec["y"], rec["status"]])
    bad = [r for r in records if r["status"] != "valid-2-colors"]
    flagged = sum(1 for r in records if r["trace"]["flagged"])
    print(f"{len(records)} records written to {out} ({flagged} via fallback search, {len(bad)} failed)")
    return EXIT_INVALID if bad else EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thetala",
                                     description="Local antimagic 2-colorings of theta graphs")
    sub = parser.add_subparsers(dest="command", required=True)
    lengths_help = "path lengths, e.g. 2,4,4,4,6 or 4^5,6"

    p = sub.add_parser("classify", help="family membership and forced colors")
    p.add_argument("lengths", help=lengths_help)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", help="build a 2-color labeling")
    p.add_argument("lengths", help=lengths_help)
    p.add_argument("--verify", action="store_true", help="re-check and embed the report")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("atlas", help="construct and verify every family member up to a size")
    p.add_argument("--max-size", type=int, required=True, help="largest edge count m")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--threads", type=int, default=0,
                   help="worker processes (default: THETA_ATLAS_THREADS or 1)")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("decide2", help="exact search for a 2-color labeling")
    p.add_argument("lengths", help=lengths_help)
    p.add_argument("--count", action="store_true", help="count all normalized solutions")
    p.add_argument("--no-prune", action="store_true", help="plain path-by-path branching")
    p.set_defaults(func=cmd_decide2)

    p = sub.add_parser("cross-check", help="search vs classifier vs brute force")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--brute-max-m", type=int, default=9)
    p.add_argument("--no-prune", action="store_true")
    p.set_defaults(func=cmd_cross_check)

    p = sub.add_parser("verify", help="check a labeling JSON file")
    p.add_argument("file")
    p.add_argument("--expect", help="expected colors X,Y")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subset", help="odd numbers below 2n summing to delta")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_subset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"thetala: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
