"""Command-line front end.

Subcommands: bounds, exclude, spectrum, residual, tables, audit,
selftest.  Generator matrices are exchanged in the text format of
`codes.parse_generator_text`.  Exit status: 0 on success, 1 on a
violated check or mismatch, 2 on usage errors.  All output is
deterministic for fixed inputs and seed.

The enumeration limit is resolved as: --limit flag, else the
WEIGHTBOUNDS_ENUM_LIMIT environment variable, else 2^26 codewords.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .bounds import BoundVerdict, parameter_verdicts
from .codes import (
    CodeParams,
    DEFAULT_ENUMERATION_LIMIT,
    LinearCode,
    code_params,
    find_codeword_of_weight,
    generator_text,
    min_distance,
    read_generator_file,
    residual,
    spectrum,
)
from .corpus import DEFAULT_SELFTEST_SEED, DEFAULT_SELFTEST_TRIALS, format_weights
from .errors import WeightBoundsError
from .exclusion import ExclusionReport, compare_methods
from .selfcheck import run_selftest
from .tables import CLAMPED, EXACT, MISMATCH, compare_table

ENV_LIMIT = "WEIGHTBOUNDS_ENUM_LIMIT"
FORMATS = ("text", "md", "csv", "json")


def _params_label(p: CodeParams) -> str:
    return f"[{p.n},{p.k},{p.d}]_{p.q}"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _cell_weights(weights, sep: str = ", ", ranges: bool = False) -> str:
    if sep == ", ":
        return format_weights(weights, ranges=ranges)
    ws = sorted(weights, reverse=True)
    return sep.join(str(w) for w in ws) if ws else "-"


# --- bounds -----------------------------------------------------------


def _verdict_dict(v: BoundVerdict) -> dict:
    return {
        "name": v.name,
        "holds": v.holds,
        "lhs": v.lhs,
        "relation": v.relation,
        "rhs": v.rhs,
        "tight": v.tight,
    }


def render_verdicts(verdicts: list[BoundVerdict], fmt: str) -> str:
    if fmt == "json":
        return _json_text({"bounds": [_verdict_dict(v) for v in verdicts]})
    if fmt == "csv":
        rows = [
            (v.name, str(v.holds).lower(), v.lhs, v.relation, v.rhs,
             str(v.tight).lower())
            for v in verdicts
        ]
        return _csv_text(("bound", "holds", "lhs", "relation", "rhs", "tight"), rows)
    if fmt == "md":
        lines = ["| bound | holds | check | tight |", "| --- | --- | --- | --- |"]
        lines += [
            f"| {v.name} | {'yes' if v.holds else 'no'} | "
            f"{v.lhs} {v.relation} {v.rhs} | {'yes' if v.tight else 'no'} |"
            for v in verdicts
        ]
        return "\n".join(lines) + "\n"
    lines = [
        f"{v.name:<19}{'ok' if v.holds else 'FAIL':<6}"
        f"{v.lhs} {v.relation} {v.rhs}" + ("  (tight)" if v.tight else "")
        for v in verdicts
    ]
    return "\n".join(lines) + "\n"


def cmd_bounds(args) -> int:
    verdicts = parameter_verdicts(args.n, args.k, args.d, args.q, args.w)
    sys.stdout.write(render_verdicts(verdicts, args.format))
    return 0 if all(v.holds for v in verdicts) else 1


# --- exclude ----------------------------------------------------------


def render_exclusion_report(report: ExclusionReport, fmt: str) -> str:
    p = report.params
    sets = {
        "chen-xie": report.chen_xie,
        "singleton": report.singleton,
        "griesmer": report.griesmer,
        "union": report.union,
    }
    if fmt == "json":
        return _json_text(
            {
                "params": {"n": p.n, "k": p.k, "d": p.d, "q": p.q},
                "chen_xie": sorted(report.chen_xie, reverse=True),
                "singleton": sorted(report.singleton, reverse=True),
                "griesmer": sorted(report.griesmer, reverse=True),
                "union": sorted(report.union, reverse=True),
                "clamped": report.clamped,
                "notes": list(report.notes),
            }
        )
    if fmt == "csv":
        row = (
            p.n, p.k, p.d, p.q,
            _cell_weights(report.chen_xie, sep=" "),
            _cell_weights(report.singleton, sep=" "),
            _cell_weights(report.griesmer, sep=" "),
            _cell_weights(report.union, sep=" "),
            str(report.clamped).lower(),
        )
        return _csv_text(
            ("n", "k", "d", "q", "chen_xie", "singleton", "griesmer", "union",
             "clamped"),
            [row],
        )
    if fmt == "md":
        lines = [
            f"excluded weights for {_params_label(p)}"
            + ("" if report.clamped else " (raw intervals)"),
            "",
            "| method | weights | count |",
            "| --- | --- | --- |",
        ]
        lines += [
            f"| {name} | {_cell_weights(s)} | {len(s)} |" for name, s in sets.items()
        ]
        if report.notes:
            lines += ["", "notes:"] + [f"- {note}" for note in report.notes]
        return "\n".join(lines) + "\n"
    lines = [
        f"excluded weights for {_params_label(p)}"
        + ("" if report.clamped else " (raw intervals)")
    ]
    lines += [f"{name:<10}: {_cell_weights(s)}" for name, s in sets.items()]
    if report.notes:
        lines.append("notes:")
        lines += [f"  - {note}" for note in report.notes]
    return "\n".join(lines) + "\n"


def cmd_exclude(args) -> int:
    params = CodeParams(n=args.n, k=args.k, d=args.d, q=args.q)
    report = compare_methods(params, clamp=not args.raw)
    if args.method != "all":
        weights = {
            "chen-xie": report.chen_xie,
            "singleton": report.singleton,
            "griesmer": report.griesmer,
        }[args.method]
        if args.format == "json":
            sys.stdout.write(
                _json_text(
                    {
                        "params": {"n": params.n, "k": params.k, "d": params.d,
                                   "q": params.q},
                        "method": args.method,
                        "weights": sorted(weights, reverse=True),
                        "clamped": report.clamped,
                    }
                )
            )
        elif args.format == "csv":
            sys.stdout.write(
                _csv_text(
                    ("method", "weights"),
                    [(args.method, _cell_weights(weights, sep=" "))],
                )
            )
        else:
            sys.stdout.write(f"{args.method}: {_cell_weights(weights)}\n")
        return 0
    sys.stdout.write(render_exclusion_report(report, args.format))
    return 0


# --- spectrum ---------------------------------------------------------


def render_spectrum(code: LinearCode, counts: dict[int, int], fmt: str) -> str:
    if fmt == "json":
        return _json_text(
            {
                "n": code.n,
                "k": code.k,
                "q": code.q,
                "d": min(w for w in counts if w > 0),
                "counts": {str(w): c for w, c in counts.items()},
            }
        )
    if fmt == "csv":
        return _csv_text(("weight", "count"), sorted(counts.items()))
    if fmt == "md":
        lines = ["| weight | count |", "| --- | --- |"]
        lines += [f"| {w} | {c} |" for w, c in sorted(counts.items())]
        return "\n".join(lines) + "\n"
    return " ".join(f"A_{w}={c}" for w, c in sorted(counts.items())) + "\n"


def cmd_spectrum(args) -> int:
    code = read_generator_file(args.file)
    counts = spectrum(code, _enum_limit(args)).nonzero()
    sys.stdout.write(render_spectrum(code, counts, args.format))
    return 0


# --- residual ---------------------------------------------------------


def cmd_residual(args) -> int:
    code = read_generator_file(args.file)
    limit = _enum_limit(args)
    try:
        cw = find_codeword_of_weight(code, args.weight, args.index, limit)
    except ValueError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 1
    res = residual(code, cw, limit)
    d = min_distance(code, limit)
    res_d = min_distance(res, limit)
    punctured = " ".join(str(j) for j, x in enumerate(cw) if x)
    comment = (
        f"residual of [{code.n},{code.k},{d}]_{code.q} at the codeword of "
        f"weight {args.weight} with class index {args.index}\n"
        f"punctured columns: {punctured}\n"
        f"residual parameters: [{res.n},{res.k},{res_d}]_{res.q}"
    )
    sys.stdout.write(generator_text(res, comment=comment))
    return 0


# --- tables -----------------------------------------------------------


def render_table_comparison(which: int, comps, fmt: str) -> str:
    ranges = which == 3
    all_flags = [flag for comp in comps for flag in comp.flags]
    tallies = {
        EXACT: sum(1 for c in comps if c.verdict == EXACT),
        CLAMPED: sum(1 for c in comps if c.verdict == CLAMPED),
        MISMATCH: sum(1 for c in comps if c.verdict == MISMATCH),
    }

    def shown(cell) -> str:
        # Display the variant the printed table used; raw when neither matches.
        s = cell.computed_clamped if cell.verdict == CLAMPED else cell.computed_raw
        return _cell_weights(s, ranges=ranges)

    if fmt == "json":
        payload = []
        for comp in comps:
            p = comp.row.params
            payload.append(
                {
                    "params": {"n": p.n, "k": p.k, "d": p.d, "q": p.q},
                    "source": comp.row.source,
                    "verdict": comp.verdict,
                    "flags": list(comp.flags),
                    "cells": [
                        {
                            "method": c.method,
                            "verdict": c.verdict,
                            "printed": sorted(c.printed, reverse=True),
                            "computed_raw": sorted(c.computed_raw, reverse=True),
                            "computed_clamped": sorted(
                                c.computed_clamped, reverse=True
                            ),
                            "printed_count": c.printed_count,
                            "count_consistent": c.count_consistent,
                        }
                        for c in comp.cells
                    ],
                }
            )
        return _json_text({"table": which, "rows": payload, "tallies": tallies})
    if fmt == "csv":
        rows = []
        for comp in comps:
            p = comp.row.params
            for c in comp.cells:
                rows.append(
                    (
                        which, comp.row.source, p.n, p.k, p.d, p.q, c.method,
                        c.verdict,
                        _cell_weights(c.printed, sep=" "),
                        _cell_weights(c.computed_raw, sep=" "),
                        _cell_weights(c.computed_clamped, sep=" "),
                        c.printed_count,
                        str(c.count_consistent).lower(),
                    )
                )
        return _csv_text(
            ("table", "source", "n", "k", "d", "q", "method", "verdict",
             "printed", "computed_raw", "computed_clamped", "printed_count",
             "count_consistent"),
            rows,
        )
    if fmt == "md":
        methods = [c.method for c in comps[0].cells]
        header = "| parameters | " + " | ".join(methods) + " | match |"
        rule = "| --- |" + " --- |" * (len(methods) + 1)
        lines = [header, rule]
        for comp in comps:
            p = comp.row.params
            cells = " | ".join(
                f"{shown(c)} ({len(c.printed)})" for c in comp.cells
            )
            lines.append(f"| {_params_label(p)} | {cells} | {comp.verdict} |")
        lines += ["", "discrepancies:"]
        lines += [f"- {flag}" for flag in all_flags] if all_flags else ["- none"]
        lines.append("")
        lines.append(
            f"rows: {len(comps)}; exact: {tallies[EXACT]}; "
            f"exact-after-clamp: {tallies[CLAMPED]}; mismatch: {tallies[MISMATCH]}"
        )
        return "\n".join(lines) + "\n"
    lines = [f"table {which}: excluded-weight reproduction ({len(comps)} rows)", ""]
    for comp in comps:
        label = _params_label(comp.row.params)
        for i, c in enumerate(comp.cells):
            prefix = f"{label:<16}" if i == 0 else " " * 16
            lines.append(
                f"{prefix}{c.method:<11}{c.verdict:<19}{shown(c)}"
            )
    lines.append("")
    lines.append("flags:")
    lines += [f"  - {flag}" for flag in all_flags] if all_flags else ["  - none"]
    lines.append(
        f"summary: rows={len(comps)} exact={tallies[EXACT]} "
        f"exact-after-clamp={tallies[CLAMPED]} mismatch={tallies[MISMATCH]}"
    )
    return "\n".join(lines) + "\n"


def cmd_tables(args) -> int:
    comps = compare_table(args.which)
    sys.stdout.write(render_table_comparison(args.which, comps, args.format))
    return 0 if all(comp.verdict != MISMATCH for comp in comps) else 1


# --- audit ------------------------------------------------------------


def cmd_audit(args) -> int:
    code = read_generator_file(args.file)
    limit = _enum_limit(args)
    params = code_params(code, limit)
    counts = spectrum(code, limit).nonzero()
    report = compare_methods(params)
    violations = []
    for name, excluded in (
        ("chen-xie", report.chen_xie),
        ("singleton", report.singleton),
        ("griesmer", report.griesmer),
    ):
        for w in sorted(excluded):
            if counts.get(w):
                violations.append((name, w, counts[w]))
    if args.format == "json":
        sys.stdout.write(
            _json_text(
                {
                    "params": {"n": params.n, "k": params.k, "d": params.d,
                               "q": params.q},
                    "counts": {str(w): c for w, c in counts.items()},
                    "excluded": {
                        "chen_xie": sorted(report.chen_xie, reverse=True),
                        "singleton": sorted(report.singleton, reverse=True),
                        "griesmer": sorted(report.griesmer, reverse=True),
                    },
                    "violations": [
                        {"criterion": name, "weight": w, "count": c}
                        for name, w, c in violations
                    ],
                }
            )
        )
    elif args.format == "csv":
        sys.stdout.write(
            _csv_text(
                ("criterion", "weight", "count"),
                [(name, w, c) for name, w, c in violations],
            )
        )
    else:
        lines = [f"audit of {_params_label(params)}"]
        lines.append("spectrum: " + " ".join(f"A_{w}={c}" for w, c in sorted(counts.items())))
        lines += [
            f"{name:<10}: {_cell_weights(s)}"
            for name, s in (
                ("chen-xie", report.chen_xie),
                ("singleton", report.singleton),
                ("griesmer", report.griesmer),
            )
        ]
        if violations:
            lines.append("violations:")
            lines += [
                f"  - {name} excludes attained weight {w} (A_w = {c})"
                for name, w, c in violations
            ]
        else:
            lines.append("no violations")
        sys.stdout.write("\n".join(lines) + "\n")
    return 1 if violations else 0


# --- selftest ---------------------------------------------------------


def cmd_selftest(args) -> int:
    if args.trials < 1:
        raise ValueError(f"--trials must be >= 1, got {args.trials}")
    results = run_selftest(args.trials, args.seed)
    print(f"selftest: trials={args.trials} seed={args.seed}")
    for res in results:
        print(
            f"{res.name:<20} checked={res.checked:<7} "
            f"violations={len(res.violations)}"
        )
        for violation in res.violations:
            print(f"  - {violation}")
    ok = all(res.ok for res in results)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


# --- parser -----------------------------------------------------------


def _enum_limit(args) -> int:
    limit = getattr(args, "limit", None)
    if limit is None:
        env = os.environ.get(ENV_LIMIT)
        if env is not None:
            try:
                limit = int(env)
            except ValueError:
                raise ValueError(
                    f"{ENV_LIMIT} must be an integer, got {env!r}"
                ) from None
    if limit is None:
        return DEFAULT_ENUMERATION_LIMIT
    if limit < 1:
        raise ValueError(f"--limit (or {ENV_LIMIT}) must be >= 1, got {limit}")
    return limit


def _add_format(sub, default: str = "text") -> None:
    sub.add_argument("--format", choices=FORMATS, default=default)


def _add_limit(sub) -> None:
    sub.add_argument(
        "--limit",
        type=int,
        help=f"max enumerated codewords (default {ENV_LIMIT} or 2^26)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightbounds",
        description="Bounds and excluded weights for q-ary linear codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="evaluate every applicable bound")
    for flag in ("--n", "--k", "--d", "--q"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument("--w", type=int, help="also evaluate the weight-aware bounds")
    _add_format(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exclude", help="excluded-weight sets for (n, k, d, q)")
    for flag in ("--n", "--k", "--d", "--q"):
        p.add_argument(flag, type=int, required=True)
    p.add_argument(
        "--method",
        choices=("chen-xie", "singleton", "griesmer", "all"),
        default="all",
    )
    p.add_argument(
        "--raw", action="store_true", help="keep formula intervals even past n"
    )
    _add_format(p)
    p.set_defaults(func=cmd_exclude)

    p = sub.add_parser("spectrum", help="exact weight distribution of a code file")
    p.add_argument("file")
    _add_limit(p)
    _add_format(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("residual", help="puncture a code at one of its codewords")
    p.add_argument("file")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument(
        "--index",
        type=int,
        default=0,
        help="0-based position within the weight class (enumeration order)",
    )
    _add_limit(p)
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("tables", help="reproduce an embedded comparison table")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("audit", help="check the exclusion criteria against a code")
    p.add_argument("file")
    _add_limit(p)
    _add_format(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("selftest", help="run the seeded property suites")
    p.add_argument("--trials", type=int, default=DEFAULT_SELFTEST_TRIALS)
    p.add_argument("--seed", type=int, default=DEFAULT_SELFTEST_SEED)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (WeightBoundsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
