"""Command-line front end.

Verbs:
  list-involutions  classification listing for one type or all up to a rank
  count             one grading, any subset of the three counting methods
  verify            every class up to a rank against the embedded tables
  tables            dump the embedded reference tables
  ideals            list the abelian stable subsets themselves

Exit codes: 0 success/agreement, 1 disagreement or table mismatch,
2 invalid input.  Output is deterministic byte-for-byte.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .rootsys import FiniteKind, RootSystemError
from .involution import classify_involutions, graded_data, make_spec
from .oracle import enumerate_abelian_subalgebras
from .census import CountReport, build_report, closed_form_count
from .golden import CSV_COLUMNS, lookup_key, reference_counts, rows as golden_rows

EXCEPTIONAL = (("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8))


def parse_type(text: str) -> FiniteKind:
    m = re.fullmatch(r"([A-G])(\d+)", text.strip())
    if not m:
        raise RootSystemError(f"cannot parse type {text!r} (expected e.g. A3, F4)")
    return FiniteKind(m.group(1), int(m.group(2)))


def _simple_kinds(max_rank: int):
    kinds = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 4)):
        kinds += [FiniteKind(fam, r) for r in range(lo, max_rank + 1)]
    kinds += [FiniteKind(f, r) for f, r in EXCEPTIONAL if r <= max_rank]
    return kinds


# ---------------------------------------------------------------------------
# emission


def _emit_json(dicts):
    return json.dumps(dicts, sort_keys=True, indent=2) + "\n"


def _emit_csv(header, rows_):
    lines = [",".join(header)]
    lines += [",".join(str(c) for c in row) for row in rows_]
    return "\n".join(lines) + "\n"


def _emit_md(header, rows_):
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows_]
    return "\n".join(lines) + "\n"


def _report_row(rep: CountReport):
    d = rep.to_dict()
    g0 = "x".join(d["g0"]["factors"]) or "-"
    if d["g0"]["center"]:
        g0 += "+center"
    pq = d["q"] if d["case"] == "hermitian" else d["p"]
    return (d["affine_type"], d["case"], pq, g0, d["count_formula"],
            "-" if d["count_minuscule"] is None else d["count_minuscule"],
            "-" if d["count_oracle"] is None else d["count_oracle"],
            "yes" if d["agree"] else "NO")


REPORT_HEADER = ("affine_type", "case", "p_or_q", "g0", "count_formula",
                 "count_minuscule", "count_oracle", "agree")


def emit_reports(reports, fmt: str) -> str:
    if fmt == "json":
        return _emit_json([r.to_dict() for r in reports])
    rows_ = [_report_row(r) for r in reports]
    if fmt == "csv":
        return _emit_csv(REPORT_HEADER, rows_)
    return _emit_md(REPORT_HEADER, rows_)


# ---------------------------------------------------------------------------
# cache


def _cached_report(spec, methods, oracle_max_rank, cache_dir):
    if cache_dir is None:
        return build_report(spec, methods=methods, oracle_max_rank=oracle_max_rank)
    path = Path(cache_dir) / f"{spec.label()}.json"
    if path.exists():
        stored = json.loads(path.read_text())
        fresh_formula, _ = closed_form_count(graded_data(spec))
        wanted = [m for m in ("formula", "minuscule", "oracle") if m in methods or "all" in methods]
        has_all = all(
            stored.get(f"count_{m}") is not None
            for m in wanted
            if m != "oracle" or spec.affine.base.rank <= oracle_max_rank
        )
        if stored.get("count_formula") == fresh_formula and has_all:
            return CountReport(
                spec=spec,
                g0_factors=tuple(
                    (f[0], int(f[1:])) for f in stored["g0"]["factors"]
                ),
                g0_has_center=stored["g0"]["center"],
                count_formula=stored["count_formula"],
                count_minuscule=stored["count_minuscule"],
                count_oracle=stored["count_oracle"],
                ingredients=stored["ingredients"],
                agree=stored["agree"],
            )
    report = build_report(spec, methods=methods, oracle_max_rank=oracle_max_rank)
    Path(cache_dir).mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
    return report


# ---------------------------------------------------------------------------
# verbs


def cmd_list(args) -> int:
    kinds = [parse_type(args.type)] if args.type else _simple_kinds(args.max_rank)
    rows_ = []
    dicts = []
    for kind in kinds:
        for spec in classify_involutions(kind):
            gd = graded_data(spec)
            g0 = "x".join(f"{f}{r}" for f, r in gd.g0_atoms()) or "-"
            if spec.case == "hermitian":
                g0 += "+center"
            rows_.append((str(spec.affine), spec.case,
                          spec.q if spec.case == "hermitian" else spec.p,
                          "".join(str(x) for x in spec.s), g0))
            dicts.append({
                "affine_type": str(spec.affine),
                "case": spec.case,
                "p": spec.p,
                "q": spec.q,
                "s": list(spec.s),
                "g0": g0,
            })
    if args.format == "json":
        sys.stdout.write(_emit_json(dicts))
    else:
        header = ("affine_type", "case", "p_or_q", "s", "g0")
        emit = _emit_csv if args.format == "csv" else _emit_md
        sys.stdout.write(emit(header, rows_))
    return 0


def cmd_count(args) -> int:
    base = parse_type(args.type)
    spec = make_spec(base, args.k, p=args.p, q=args.q)
    methods = ("formula", "minuscule", "oracle") if args.method == "all" else (args.method,)
    report = _cached_report(spec, methods, args.oracle_max_rank, args.cache)
    if args.format in ("json", "csv"):
        sys.stdout.write(emit_reports([report], args.format))
    else:
        counts = [c for c in (report.count_formula, report.count_minuscule,
                              report.count_oracle) if c is not None]
        verdict = "agree" if report.agree else "DISAGREE"
        sys.stdout.write("/".join(str(c) for c in counts) + f" {verdict}\n")
    return 0 if report.agree else 1


def cmd_verify(args) -> int:
    table = reference_counts(max(args.max_rank, 8))
    kinds = _simple_kinds(args.max_rank)
    for fam, rank in EXCEPTIONAL:
        kind = FiniteKind(fam, rank)
        if kind not in kinds:
            kinds.append(kind)
    failures = 0
    lines = []
    for kind in kinds:
        for spec in classify_involutions(kind):
            report = _cached_report(
                spec, ("formula", "minuscule", "oracle"),
                args.oracle_max_rank, args.cache,
            )
            key = lookup_key(str(spec.affine), spec.case, report.g0_factors)
            expected = table.get(key)
            ok = report.agree and expected == report.count_formula
            if not ok:
                failures += 1
            counts = "/".join(
                str(c) for c in (report.count_formula, report.count_minuscule,
                                 report.count_oracle) if c is not None
            )
            lines.append(
                f"{spec.label():14s} {counts:>12s} expected {expected} "
                f"{'ok' if ok else 'FAIL'}"
            )
    sys.stdout.write("\n".join(lines) + "\n")
    sys.stdout.write(f"{len(lines)} classes, {failures} failures\n")
    return 1 if failures else 0


def cmd_tables(args) -> int:
    rows_ = golden_rows(args.max_rank)
    if args.format == "json":
        dicts = [{c: row[c] for c in CSV_COLUMNS} for row in rows_]
        sys.stdout.write(_emit_json(dicts))
    else:
        data = [tuple(row[c] for c in CSV_COLUMNS) for row in rows_]
        emit = _emit_md if args.format == "md" else _emit_csv
        sys.stdout.write(emit(CSV_COLUMNS, data))
    return 0


def cmd_ideals(args) -> int:
    base = parse_type(args.type)
    spec = make_spec(base, args.k, p=args.p, q=args.q)
    families = enumerate_abelian_subalgebras(graded_data(spec))
    if args.format == "json":
        data = [[list(root) for root in fam] for fam in families]
        sys.stdout.write(_emit_json({"spec": spec.label(), "count": len(families),
                                     "ideals": data}))
    else:
        rows_ = [
            (i, len(fam), " ".join("(" + ",".join(map(str, r)) + ")" for r in fam) or "-")
            for i, fam in enumerate(families)
        ]
        emit = _emit_csv if args.format == "csv" else _emit_md
        sys.stdout.write(emit(("index", "size", "members"), rows_))
        sys.stdout.write(f"total {len(families)}\n")
    return 0


# ---------------------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2abelian",
        description="Counts of abelian stable subalgebras in order-2 graded simple Lie algebras.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, cache=True):
        p.add_argument("--format", choices=("json", "csv", "md"), default="md")
        if cache:
            p.add_argument("--cache", default=None, metavar="DIR")

    p = sub.add_parser("list-involutions", help="list grading classes")
    p.add_argument("--type", default=None)
    p.add_argument("--max-rank", type=int, default=6)
    common(p, cache=False)

    p = sub.add_parser("count", help="count for one grading")
    p.add_argument("--type", required=True)
    p.add_argument("--k", type=int, default=1, choices=(1, 2))
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--method", choices=("formula", "minuscule", "oracle", "all"),
                   default="all")
    p.add_argument("--oracle-max-rank", type=int, default=6)
    common(p)

    p = sub.add_parser("verify", help="check every class against the reference tables")
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--oracle-max-rank", type=int, default=6)
    common(p)

    p = sub.add_parser("tables", help="dump the embedded reference tables")
    p.add_argument("--max-rank", type=int, default=8)
    common(p, cache=False)

    p = sub.add_parser("ideals", help="list the abelian stable subsets")
    p.add_argument("--type", required=True)
    p.add_argument("--k", type=int, default=1, choices=(1, 2))
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    common(p, cache=False)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    handlers = {
        "list-involutions": cmd_list,
        "count": cmd_count,
        "verify": cmd_verify,
        "tables": cmd_tables,
        "ideals": cmd_ideals,
    }
    try:
        return handlers[args.verb](args)
    except RootSystemError as exc:
        sys.stderr.write(f"error: {exc}\n")
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
