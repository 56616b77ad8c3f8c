"""Command-line surface: count, table, verify, and rs subcommands.

Machine-readable output: --format json emits one JSON object per line,
--format csv a fixed header then rows, --format table aligned text.  Big
integers are serialized as decimal strings so consumers never round.
Exit status: 0 success, 1 invariant or assertion failure, 2 usage error.

Usage sketch:
    ffsubsum count --p 2 --e 7 --exclude 0,g^1,g^2,g^3 --k 5 --b 1
    ffsubsum table --p 5 --e 1 --exclude 0 --format csv
    ffsubsum verify --max-q 16 --max-c 3
    ffsubsum rs scan --p 7 --e 1 --n-mode punctured --k 3
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import counts, rscodes, verify
from .combinatorics import binom
from .gf import (
    Field,
    format_element,
    make_field,
    parse_element,
    split_element_list,
)
from .limits import GuardExceeded

__all__ = ["main", "console_entry"]

COUNT_FIELDS = [
    "p", "e", "q", "exclusions", "k", "b", "N", "M",
    "main_term", "main_term_float", "error", "bound", "bound_mode", "method",
]

RS_FIELDS = [
    "q", "n", "k", "degree", "verdict", "distance", "lower", "upper",
    "b1", "count", "solvable", "deep_hole_free", "unsolvable",
]


class UsageError(Exception):
    pass


def _count_record(report: counts.CountReport) -> dict:
    query = report.query
    field = query.exclusions.field
    return {
        "p": field.p,
        "e": field.e,
        "q": field.q,
        "exclusions": ",".join(format_element(a) for a in query.exclusions.excluded),
        "k": query.k,
        "b": format_element(query.b),
        "N": str(report.n_count),
        "M": str(report.m_count),
        "main_term": f"{report.main_term_num}/{report.main_term_den}",
        "main_term_float": float(report.main_term),
        "error": str(report.error),
        "bound": str(report.bound.scaled) if report.bound else None,
        "bound_mode": report.bound.mode if report.bound else None,
        "method": report.method,
    }


def _emit_records(records, fields, fmt: str, out) -> None:
    if fmt == "json":
        for rec in records:
            print(json.dumps(rec), file=out)
    elif fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(fields)
        for rec in records:
            writer.writerow(["" if rec.get(f) is None else rec.get(f) for f in fields])
    else:
        for rec in records:
            line = "  ".join(
                f"{f}={rec[f]}" for f in fields if rec.get(f) is not None
            )
            print(line, file=out)


def _build_field(args) -> Field:
    try:
        return make_field(args.p, args.e)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_exclusions(field: Field, text: str | None) -> counts.ExclusionSet:
    try:
        parts = split_element_list(text) if text else []
        return counts.ExclusionSet(
            field, tuple(parse_element(t, field) for t in parts)
        )
    except ValueError as exc:
        raise UsageError(f"bad exclusion list: {exc}") from exc


def cmd_count(args, out) -> int:
    field = _build_field(args)
    excl = _parse_exclusions(field, args.exclude)
    try:
        b = parse_element(args.b, field)
        query = counts.CountQuery(excl, args.k, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = counts.count_excluded(query, method=args.method)
    _emit_records([_count_record(report)], COUNT_FIELDS, args.format, out)
    return 0


def _parse_k_range(text: str | None, n: int) -> range:
    if not text:
        return range(0, n + 1)
    try:
        if ":" in text:
            lo, hi = text.split(":", 1)
            lo_i, hi_i = int(lo), int(hi)
        else:
            lo_i = hi_i = int(text)
    except ValueError as exc:
        raise UsageError(f"bad k range {text!r}; use LO:HI or K") from exc
    if not 0 <= lo_i <= hi_i <= n:
        raise UsageError(f"k range {text!r} outside [0, {n}]")
    return range(lo_i, hi_i + 1)


def cmd_table(args, out) -> int:
    field = _build_field(args)
    excl = _parse_exclusions(field, args.exclude)
    ks = _parse_k_range(args.k_range, excl.n)
    grid = counts.count_grid(excl, k_max=ks.stop - 1)
    records = []
    checks = []
    for k in ks:
        for b in field.elements():
            query = counts.CountQuery(excl, k, b)
            report = counts.count_excluded(query, method=args.method)
            if report.n_count != grid[k][b.enc]:
                print(
                    f"internal error: table/grid disagree at k={k}, b={b}",
                    file=sys.stderr,
                )
                return 1
            records.append(_count_record(report))
        row_sum = sum(grid[k])
        expected = binom(excl.n, k)
        checks.append(
            {"check": "row_sum", "k": k, "sum": str(row_sum), "expected": str(expected),
             "ok": row_sum == expected}
        )
    _emit_records(records, COUNT_FIELDS, args.format, out)
    if args.format == "json":
        for ch in checks:
            print(json.dumps(ch), file=out)
    elif args.format == "table":
        for ch in checks:
            status = "ok" if ch["ok"] else "MISMATCH"
            print(
                f"row-sum check k={ch['k']}: {ch['sum']} "
                f"(expected {ch['expected']}) {status}",
                file=out,
            )
    if not all(ch["ok"] for ch in checks):
        print("row-sum check failed", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args, out) -> int:
    results = verify.run_all(max_q=args.max_q, max_c=args.max_c, seed=args.seed)
    total = 0
    bad = 0
    for res in results:
        status = "ok" if res.ok else f"{res.failure_count} FAILURES"
        print(f"{res.name}: {res.checks} checks, {status}", file=out)
        for msg in res.failures:
            print(f"  - {msg}", file=out)
        total += res.checks
        bad += res.failure_count
    if bad:
        print(f"{bad} of {total} checks failed", file=out)
        return 1
    print(f"all checks passed ({total} assertions)", file=out)
    return 0


def _build_code(args, field: Field) -> rscodes.RSCode:
    if args.n_mode == "full":
        return rscodes.full_field_code(field, args.k)
    if args.n_mode == "punctured":
        return rscodes.punctured_code(field, args.k)
    raise UsageError(f"unknown n-mode {args.n_mode!r}")


def _parse_word(args, code: rscodes.RSCode) -> rscodes.Word:
    try:
        return rscodes.parse_word(args.word, code)
    except ValueError as exc:
        raise UsageError(f"bad word: {exc}") from exc


def cmd_rs_classify(args, out) -> int:
    field = _build_field(args)
    code = _build_code(args, field)
    word = _parse_word(args, code)
    degree = rscodes.word_degree(word)
    bounds = rscodes.distance_bounds(word)
    rec = {
        "q": field.q, "n": code.n, "k": code.k,
        "degree": None if degree == rscodes.NEG_INF else int(degree),
        "lower": bounds.lower, "upper": bounds.upper,
    }
    if bounds.codeword:
        rec["verdict"] = "codeword"
        rec["distance"] = 0
    elif degree in (code.k, code.k + 1):
        rec["verdict"] = rscodes.classify_word(word)
    else:
        raise UsageError(
            f"degree d(u)={degree} outside the classified range {{k, k+1}}"
        )
    _emit_records([rec], RS_FIELDS, args.format, out)
    return 0


def cmd_rs_distance(args, out) -> int:
    field = _build_field(args)
    code = _build_code(args, field)
    word = _parse_word(args, code)
    degree = rscodes.word_degree(word)
    rec = {
        "q": field.q, "n": code.n, "k": code.k,
        "degree": None if degree == rscodes.NEG_INF else int(degree),
        "distance": rscodes.distance_to_code(word),
    }
    _emit_records([rec], RS_FIELDS, args.format, out)
    return 0


def cmd_rs_scan(args, out) -> int:
    field = _build_field(args)
    report = rscodes.deep_hole_scan(field, args.n_mode, args.k)
    records = [
        {
            "q": field.q, "n": report.n, "k": report.k,
            "b1": format_element(e.b1), "count": str(e.count),
            "solvable": e.solvable,
        }
        for e in report.entries
    ]
    records.append(
        {
            "q": field.q, "n": report.n, "k": report.k,
            "deep_hole_free": report.deep_hole_free,
            "unsolvable": ",".join(
                format_element(b) for b in report.unsolvable_targets
            ),
        }
    )
    _emit_records(records, RS_FIELDS, args.format, out)
    return 0


def _add_common(parser: argparse.ArgumentParser, need_field: bool = True) -> None:
    if need_field:
        parser.add_argument("--p", type=int, required=True, help="field characteristic")
        parser.add_argument("--e", type=int, default=1, help="extension degree")
    parser.add_argument(
        "--format", choices=["table", "json", "csv"], default="table",
        help="output format",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized grids")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffsubsum",
        description="Exact subset-sum counting over finite fields "
        "and Reed-Solomon deep-hole analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="one exact count N(k, b, D)")
    _add_common(p_count)
    p_count.add_argument("--exclude", default="", help="comma-separated excluded elements")
    p_count.add_argument("--k", type=int, required=True, help="subset size")
    p_count.add_argument("--b", required=True, help="target sum (element text)")
    p_count.add_argument(
        "--method", choices=["closed_form", "oracle", "both"], default=None,
        help="force a code path; 'both' asserts agreement",
    )
    p_count.set_defaults(func=cmd_count)

    p_table = sub.add_parser("table", help="the full (k, b) count grid")
    _add_common(p_table)
    p_table.add_argument("--exclude", default="", help="comma-separated excluded elements")
    p_table.add_argument("--k-range", dest="k_range", default=None, help="LO:HI or K")
    p_table.add_argument(
        "--method", choices=["closed_form", "oracle", "both"], default=None,
    )
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the cross-validation suites")
    _add_common(p_verify, need_field=False)
    p_verify.add_argument("--max-q", dest="max_q", type=int, default=27)
    p_verify.add_argument("--max-c", dest="max_c", type=int, default=3)
    p_verify.set_defaults(func=cmd_verify)

    p_rs = sub.add_parser("rs", help="Reed-Solomon analysis")
    rs_sub = p_rs.add_subparsers(dest="rs_command", required=True)

    p_cl = rs_sub.add_parser("classify", help="deep hole / ordinary verdict for a word")
    _add_common(p_cl)
    p_cl.add_argument("--n-mode", dest="n_mode", choices=["full", "punctured"], required=True)
    p_cl.add_argument("--k", type=int, required=True, help="code dimension")
    p_cl.add_argument("--word", required=True, help="comma-separated word values")
    p_cl.set_defaults(func=cmd_rs_classify)

    p_di = rs_sub.add_parser("distance", help="exact distance from a word to the code")
    _add_common(p_di)
    p_di.add_argument("--n-mode", dest="n_mode", choices=["full", "punctured"], required=True)
    p_di.add_argument("--k", type=int, required=True)
    p_di.add_argument("--word", required=True)
    p_di.set_defaults(func=cmd_rs_distance)

    p_sc = rs_sub.add_parser("scan", help="deep-hole scan over all leading coefficients")
    _add_common(p_sc)
    p_sc.add_argument("--n-mode", dest="n_mode", choices=["full", "punctured"], required=True)
    p_sc.add_argument("--k", type=int, required=True)
    p_sc.set_defaults(func=cmd_rs_scan)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 2
    except counts.OracleMismatch as exc:
        print(f"oracle disagreement: {exc}", file=sys.stderr)
        return 1
    except (ArithmeticError, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
