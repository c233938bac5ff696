"""Command-line front end: counts, series, asymptotics, comparisons,
constants, stopping simulation, and a self-check suite.

Output formats: json (default), csv, plain; select with --format or the
TREEMBED_FORMAT environment variable.  Big integers are serialized as
decimal strings.  Exit codes: 0 success, 1 self-check failure, 2 usage,
3 domain error, 4 budget/resource error.
"""

from __future__ import annotations

import argparse
import csv as _csv
import io
import json
import math
import os
import sys

from .asymptotics import (
    asymptotic_estimate,
    compare_patterns,
    ratio_limit,
    solve_nonplane_constants,
)
from .errors import BudgetError, DomainError, TreeParseError
from .families import DEFAULT_ENUM_CAP, Family, enumerate_family, family_size
from .genfun import embedding_series
from .oracle import (
    DEFAULT_SUBSET_BUDGET,
    count_forest_in_family,
    count_in_family,
)
from .stopping import simulate_best_choice
from .trees import (
    PlaneForest,
    degree_sequence,
    parse_forest,
    parse_tree,
)

SCHEMA_VERSION = 1


def _parse_pattern(text: str):
    forest = parse_forest(text)
    if forest.r == 1:
        return forest.components[0]
    return forest


def _emit(payload: dict, fmt: str, rows_key: str | None = None) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = _csv.writer(buf)
        if rows_key is not None and rows_key in payload:
            rows = payload[rows_key]
            if rows:
                writer.writerow(rows[0].keys())
                for row in rows:
                    writer.writerow(row.values())
        else:
            writer.writerow(["key", "value"])
            for k, v in payload.items():
                writer.writerow([k, json.dumps(v) if isinstance(v, (dict, list)) else v])
        return buf.getvalue().rstrip("\n")
    lines = []
    for k, v in payload.items():
        if rows_key is not None and k == rows_key:
            for row in v:
                lines.append("  " + "  ".join(f"{rk}={rv}" for rk, rv in row.items()))
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def _base_payload(command: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command}


def _estimate_strings(est, n: int) -> dict:
    log10 = (math.log10(est.K) + n * math.log10(est.beta)
             + est.alpha * math.log10(n)) if est.admits(n) and est.K > 0 else None
    if log10 is None:
        text = "0"
    else:
        exp = math.floor(log10)
        text = f"{10 ** (log10 - exp):.6f}e{exp:+d}"
    return {"n": n, "estimate": text,
            "estimate_log10": log10 if log10 is not None else "-inf"}


def _cmd_count(args, fmt):
    pattern = _parse_pattern(args.pattern)
    fam = Family.from_string(args.family)
    budget = None if args.force else args.budget
    cap = None if args.force else args.cap
    if args.force:
        print("warning: --force lifts the enumeration cap and subset budget; "
              "this may take a very long time", file=sys.stderr)
    if isinstance(pattern, PlaneForest):
        c = count_forest_in_family(pattern, fam, args.n, budget=budget, cap=cap)
    else:
        c = count_in_family(pattern, fam, args.n, budget=budget, cap=cap)
    payload = _base_payload("count")
    payload.update({
        "engine": "oracle", "family": fam.value, "pattern": args.pattern,
        "n": args.n, "all": str(c.all), "good": str(c.good)})
    print(_emit(payload, fmt))
    return 0


def _cmd_series(args, fmt):
    pattern = _parse_pattern(args.pattern)
    fam = Family.from_string(args.family)
    series = embedding_series(pattern, fam, args.N, args.kind)
    payload = _base_payload("series")
    payload.update({
        "engine": "series", "family": fam.value, "pattern": args.pattern,
        "kind": args.kind, "N": args.N, "n_start": 1,
        "coefficients": [str(series.coeff(n)) for n in range(1, args.N + 1)]})
    print(_emit(payload, fmt))
    return 0


def _cmd_asym(args, fmt):
    pattern = _parse_pattern(args.pattern)
    fam = Family.from_string(args.family)
    est = asymptotic_estimate(pattern, fam, args.kind)
    payload = _base_payload("asym")
    payload.update({
        "engine": "asymptotic", "family": fam.value, "pattern": args.pattern,
        "kind": args.kind, "K": est.K, "beta": est.beta, "alpha": est.alpha,
        "parity": est.parity})
    if args.n is not None:
        payload.update(_estimate_strings(est, args.n))
    print(_emit(payload, fmt))
    return 0


def _cmd_ratio(args, fmt):
    pattern = _parse_pattern(args.pattern)
    if isinstance(pattern, PlaneForest):
        raise DomainError("the good/all ratio is defined for tree patterns only")
    fam = Family.from_string(args.family)
    d = degree_sequence(pattern)
    payload = _base_payload("ratio")
    payload.update({"engine": "series+asymptotic", "family": fam.value,
                    "pattern": args.pattern})
    if d.k_param == 0:
        payload["regime"] = "1/n"
        payload["limit"] = None
    else:
        payload["regime"] = "1/sqrt(n)"
        payload["limit"] = ratio_limit(pattern, fam)
    step = 2 if fam is not Family.PLANTED_PLANE else 1
    start = pattern.size if pattern.size % 2 == 1 or fam is Family.PLANTED_PLANE \
        else pattern.size + 1
    all_series = embedding_series(pattern, fam, args.N, "all")
    good_series = embedding_series(pattern, fam, args.N, "good")
    rows = []
    for n in range(start, args.N + 1, step):
        a = all_series.coeff(n)
        if a == 0:
            continue
        g = good_series.coeff(n)
        rows.append({"n": n, "all": str(a), "good": str(g),
                     "sqrt_n_ratio": math.sqrt(n) * g / a})
    if args.points and len(rows) > args.points:
        idx = [round(i * (len(rows) - 1) / (args.points - 1))
               for i in range(args.points)]
        rows = [rows[i] for i in sorted(set(idx))]
    payload["rows"] = rows
    print(_emit(payload, fmt, rows_key="rows"))
    return 0


def _cmd_compare(args, fmt):
    fam = Family.from_string(args.family)
    s1 = parse_tree(args.pattern1)
    s2 = parse_tree(args.pattern2)
    v = compare_patterns(s1, s2, fam)
    payload = _base_payload("compare")
    payload.update({
        "engine": "asymptotic", "family": fam.value,
        "pattern1": args.pattern1, "pattern2": args.pattern2,
        "comparable": v.comparable, "k1": str(v.k1), "k2": str(v.k2),
        "limit1": v.limit1, "limit2": v.limit2, "ordered": v.ordered})
    print(_emit(payload, fmt))
    return 0


def _cmd_constants(args, fmt):
    c = solve_nonplane_constants(args.precision)
    payload = _base_payload("constants")
    payload.update({
        "engine": "numeric", "precision": args.precision,
        "rho": c.digits["rho"], "b": c.digits["b"],
        "sigma": c.digits["sigma"], "a": c.digits["a"],
        "residual_f": c.residual_f, "residual_fv": c.residual_fv})
    print(_emit(payload, fmt))
    return 0


def _cmd_simulate(args, fmt):
    pattern = _parse_pattern(args.pattern)
    if isinstance(pattern, PlaneForest):
        raise DomainError("simulation conditions on connected observations only")
    fam = Family.from_string(args.family)
    r = simulate_best_choice(fam, args.n, pattern, args.trials, args.seed)
    payload = _base_payload("simulate")
    payload.update({
        "engine": "monte-carlo", "family": fam.value, "pattern": args.pattern,
        "n": args.n, "trials": r.trials, "seed": r.seed, "hits": r.hits,
        "successes": r.successes, "estimate": r.estimate,
        "std_error": r.std_error, "raw_estimate": r.raw_estimate,
        "inconclusive": r.inconclusive})
    print(_emit(payload, fmt))
    return 0


def _selfcheck_cases():
    from .trees import parse_tree as p

    cherry = p("(()())")
    leaf = p("()")
    chain2 = p("(())")
    star3 = p("(()()())")
    cases = []
    for s in (leaf, chain2, cherry, star3):
        cases.append((s, Family.PLANE_BINARY, range(1, 10, 2)))
        cases.append((s, Family.PLANTED_PLANE, range(1, 8)))
        if s is not star3:
            cases.append((s, Family.NONPLANE_BINARY, range(1, 10, 2)))
    return cases


def _cmd_selfcheck(args, fmt):
    failures = 0
    for s, fam, ns in _selfcheck_cases():
        series_all = embedding_series(s, fam, max(ns), "all")
        series_good = embedding_series(s, fam, max(ns), "good")
        for n in ns:
            c = count_in_family(s, fam, n)
            ok = (c.all, c.good) == (series_all.coeff(n), series_good.coeff(n))
            from .trees import format_tree
            tag = f"{fam.value} pattern={format_tree(s)} n={n}"
            if ok:
                print(f"PASS {tag} all={c.all} good={c.good}")
            else:
                failures += 1
                print(f"FAIL {tag} oracle=({c.all},{c.good}) "
                      f"series=({series_all.coeff(n)},{series_good.coeff(n)})")
    print(f"selfcheck: {'OK' if failures == 0 else f'{failures} failures'}")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treembed",
        description="Exact and asymptotic counts of rooted tree pattern "
                    "embeddings in binary and plane tree families.")
    parser.add_argument("--format", choices=("json", "csv", "plain"),
                        default=None,
                        help="output format (default: json or $TREEMBED_FORMAT)")
    # The same flag is accepted after the subcommand; SUPPRESS keeps an
    # absent subcommand-level flag from clobbering a root-level one.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "plain"),
                        default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=lambda **kw: argparse.ArgumentParser(
                                    parents=[common], **kw))

    def add_common(p, pattern=True, family=True):
        if family:
            p.add_argument("--family", required=True,
                           help="plane-binary | nonplane-binary | planted-plane")
        if pattern:
            p.add_argument("--pattern", required=True,
                           help="tree literal like '(()())', or ';'-separated forest")

    p = sub.add_parser("count", help="oracle counts at a single host size")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET,
                   help="max candidate subsets to sweep (default 1e8)")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help="max trees to enumerate (default 1e6)")
    p.add_argument("--force", action="store_true",
                   help="lift budget and cap (may take very long)")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("series", help="exact counting series, coefficients 1..N")
    add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--kind", choices=("all", "good"), default="all")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("asym", help="leading-order estimate K * beta^n * n^alpha")
    add_common(p)
    p.add_argument("--kind", choices=("all", "good"), default="all")
    p.add_argument("--n", type=int, default=None,
                   help="also evaluate the estimate at this size")
    p.set_defaults(func=_cmd_asym)

    p = sub.add_parser("ratio", help="sqrt(n) * good/all table and its limit")
    add_common(p)
    p.add_argument("--N", type=int, default=201)
    p.add_argument("--points", type=int, default=12,
                   help="number of table rows (default 12; 0 = all)")
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("compare", help="ratio-limit comparison of two patterns")
    p.add_argument("--family", required=True)
    p.add_argument("pattern1")
    p.add_argument("pattern2")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("constants",
                       help="singular constants of the unordered binary family")
    p.add_argument("--precision", type=int, default=15,
                   help="significant digits (max 30)")
    p.set_defaults(func=_cmd_constants)

    p = sub.add_parser("simulate", help="Monte Carlo best-choice validation")
    add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("selfcheck", help="oracle/series equivalence suite")
    p.set_defaults(func=_cmd_selfcheck)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "format", None) or os.environ.get("TREEMBED_FORMAT", "json")
    try:
        return args.func(args, fmt)
    except (TreeParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return 4


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
