"""Command-line interface: depth computation, experiments, gadgets, benchmarks."""

from __future__ import annotations

import argparse
import json
import sys

from .angular import spherical_depth_fast
from .bench import DEFAULT_BRUTE_CAP, DEFAULT_SIZES, bench_to_csv, run_bench
from .betafast import beta_depth_fast
from .experiment import report_to_csv, report_to_json, run_experiment
from .gadgets import (
    _positive_values,
    build_spherical_gadget,
    build_uniqueness_gadget,
    decide_uniqueness_lens,
    decide_uniqueness_spherical,
)
from .pointio import read_points_csv, write_points_csv
from .reference import Dataset, beta_depth_brute

AUDIT_MAX_N = 500


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betadepth",
        description="Beta-skeleton data depth: fast planar engines, "
                    "reference oracle, gadgets, and benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="depth of query points w.r.t. a data file")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--engine", choices=("auto", "brute", "fast"), default="auto")
    p.add_argument("--data", required=True, help="CSV of data points")
    p.add_argument("--query", required=True, help="CSV of query points")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--audit", action=argparse.BooleanOptionalAction, default=None,
                   help="cross-check the fast engines against the reference "
                        f"(default: on for n <= {AUDIT_MAX_N} with engine=auto)")

    p = sub.add_parser("experiment", help="random-square depth comparison")
    p.add_argument("--n-data", type=int, default=300)
    p.add_argument("--n-query", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--half-width", type=float, default=10.0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("gadget", help="uniqueness gadget fixtures")
    p.add_argument("--kind", choices=("spherical", "lens", "beta"), required=True)
    p.add_argument("--beta", type=float, default=None,
                   help="required for --kind beta")
    p.add_argument("--values", required=True, help="comma-separated reals")
    p.add_argument("--emit-points", default=None, metavar="PATH",
                   help="also write the gadget points to a CSV file")

    p = sub.add_parser("bench", help="engine timing table")
    p.add_argument("--max-n", type=int, default=DEFAULT_SIZES[-1])
    p.add_argument("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=3)

    return parser


def _cmd_compute(args) -> int:
    data = Dataset(read_points_csv(args.data))
    queries = read_points_csv(args.query)
    if queries.shape[1] != data.d:
        raise ValueError(
            f"query dimension {queries.shape[1]} does not match data dimension {data.d}")
    if data.n < 2:
        raise ValueError("need at least 2 data points")

    engine = args.engine
    if engine == "fast" and data.d != 2:
        raise ValueError("engine=fast requires 2-dimensional data")
    if engine == "auto":
        engine = "fast" if data.d == 2 else "brute"

    audit = args.audit
    if audit is None:
        audit = args.engine == "auto" and engine == "fast" and data.n <= AUDIT_MAX_N

    results = []
    for i, q in enumerate(queries):
        if engine == "brute":
            res = beta_depth_brute(q, data, args.beta)
        elif args.beta == 1.0:
            res = spherical_depth_fast(q, data)
        else:
            res = beta_depth_fast(q, data, args.beta)
        if audit and engine == "fast":
            ref = beta_depth_brute(q, data, args.beta)
            if ref.raw_count != res.raw_count:
                raise AssertionError(
                    f"engine disagreement at query {i}: "
                    f"fast={res.raw_count} reference={ref.raw_count}")
        results.append(res)

    method = results[0].method
    if args.format == "json":
        obj = {
            "n": data.n,
            "beta": args.beta,
            "method": method,
            "results": [
                {"query_index": i, "raw_count": r.raw_count, "normalized": r.normalized}
                for i, r in enumerate(results)
            ],
        }
        print(json.dumps(obj, indent=2))
    else:
        print("query_index,raw_count,normalized")
        for i, r in enumerate(results):
            print(f"{i},{r.raw_count},{r.normalized!r}")
    return 0


def _cmd_experiment(args) -> int:
    report = run_experiment(args.n_data, args.n_query, args.seed, args.half_width)
    if args.format == "json":
        print(report_to_json(report))
    else:
        print(report_to_csv(report), end="")
    return 0


def _parse_values(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"--values must be comma-separated reals, got {text!r}") from None


def _cmd_gadget(args) -> int:
    values = _parse_values(args.values)
    n = len(values)
    shifted = _positive_values(values, shift=True)
    if args.kind == "spherical":
        gadget = build_spherical_gadget(shifted)
        raw = spherical_depth_fast((0.0, 0.0), gadget).raw_count
        obj = {"kind": "spherical", "n": n, "raw_count": raw,
               "unique": decide_uniqueness_spherical(values),
               "expected_unique_raw_count": 4 * n * n + 2 * n}
    elif args.kind == "lens":
        gadget = build_uniqueness_gadget(shifted, 2.0)
        unique, dup_pairs = decide_uniqueness_lens(values)
        raw = beta_depth_fast((0.0, 0.0), gadget, 2.0).raw_count
        obj = {"kind": "lens", "n": n, "raw_count": raw, "unique": unique,
               "duplicate_pairs": dup_pairs,
               "expected_unique_raw_count": n}
    else:
        if args.beta is None or args.beta <= 1.0:
            raise ValueError("--kind beta requires --beta > 1")
        gadget = build_uniqueness_gadget(shifted, args.beta)
        raw = beta_depth_fast((0.0, 0.0), gadget, args.beta).raw_count
        obj = {"kind": "beta", "beta": args.beta, "n": n,
               "raw_count": raw, "unique": raw == n,
               "duplicate_pairs": (raw - n) // 2,
               "expected_unique_raw_count": n}
    if args.emit_points:
        write_points_csv(gadget.points, args.emit_points)
        obj["points_file"] = args.emit_points
    print(json.dumps(obj, indent=2))
    return 0


def _cmd_bench(args) -> int:
    sizes = [n for n in DEFAULT_SIZES if n <= args.max_n]
    if not sizes:
        sizes = [args.max_n]
    rows = run_bench(sizes=sizes, brute_cap=args.brute_cap,
                     seed=args.seed, repeats=args.repeats)
    print(bench_to_csv(rows), end="")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "compute": _cmd_compute,
        "experiment": _cmd_experiment,
        "gadget": _cmd_gadget,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
