"""Reproducible random-square experiment comparing three depths per query.

Generates a data set and query set uniformly in a centered square, computes
triangle (simplicial) depth with the reference engine and spherical/lens
depth with the fast engines, and summarizes minima and maxima of the values
and their pairwise ratios. Ratios with a zero denominator are reported as
``inf``. Identical seeds yield byte-identical reports: the generator is
numpy's seeded PCG64, drawing the data set first, then the queries.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .angular import spherical_depth_fast
from .betafast import beta_depth_fast
from .reference import Dataset, simplicial_depth_brute


@dataclass(frozen=True)
class ExperimentRow:
    query_index: int
    sd_raw: int
    sphd_raw: int
    ld_raw: int
    sd: float
    sphd: float
    ld: float


@dataclass(frozen=True)
class ExperimentReport:
    n_data: int
    n_query: int
    seed: int
    half_width: float
    rows: tuple[ExperimentRow, ...]
    summary: dict[str, float]


def generate_square_points(rng: np.random.Generator, n: int, half_width: float) -> np.ndarray:
    return rng.uniform(-half_width, half_width, size=(n, 2))


def _ratio(num: float, den: float) -> float:
    return num / den if den > 0.0 else math.inf


def run_experiment(n_data: int, n_query: int, seed: int,
                   half_width: float = 10.0) -> ExperimentReport:
    if n_data < 3:
        raise ValueError("need at least 3 data points")
    if n_query < 1:
        raise ValueError("need at least 1 query point")
    if not (math.isfinite(half_width) and half_width > 0.0):
        raise ValueError("half_width must be a positive real")
    rng = np.random.default_rng(seed)
    data = Dataset(generate_square_points(rng, n_data, half_width))
    queries = generate_square_points(rng, n_query, half_width)

    rows = []
    for i, q in enumerate(queries):
        sd = simplicial_depth_brute(q, data)
        sph = spherical_depth_fast(q, data)
        ld = beta_depth_fast(q, data, 2.0)
        rows.append(ExperimentRow(
            query_index=i,
            sd_raw=sd.raw_count, sphd_raw=sph.raw_count, ld_raw=ld.raw_count,
            sd=sd.normalized, sphd=sph.normalized, ld=ld.normalized,
        ))

    sds = [r.sd for r in rows]
    sphs = [r.sphd for r in rows]
    lds = [r.ld for r in rows]
    sph_sd = [_ratio(r.sphd, r.sd) for r in rows]
    ld_sd = [_ratio(r.ld, r.sd) for r in rows]
    ld_sph = [_ratio(r.ld, r.sphd) for r in rows]
    summary = {
        "min_sd": min(sds), "max_sd": max(sds),
        "min_sphd": min(sphs), "max_sphd": max(sphs),
        "min_ld": min(lds), "max_ld": max(lds),
        "min_sphd_over_sd": min(sph_sd), "max_sphd_over_sd": max(sph_sd),
        "min_ld_over_sd": min(ld_sd), "max_ld_over_sd": max(ld_sd),
        "min_ld_over_sphd": min(ld_sph), "max_ld_over_sphd": max(ld_sph),
    }
    return ExperimentReport(n_data=n_data, n_query=n_query, seed=seed,
                            half_width=half_width, rows=tuple(rows),
                            summary=summary)


def _json_value(x: float):
    return "inf" if math.isinf(x) else x


def report_to_json(report: ExperimentReport) -> str:
    obj = {
        "n_data": report.n_data,
        "n_query": report.n_query,
        "seed": report.seed,
        "half_width": report.half_width,
        "rows": [
            {"query_index": r.query_index,
             "sd_raw": r.sd_raw, "sphd_raw": r.sphd_raw, "ld_raw": r.ld_raw,
             "sd": r.sd, "sphd": r.sphd, "ld": r.ld}
            for r in report.rows
        ],
        "summary": {k: _json_value(v) for k, v in report.summary.items()},
    }
    return json.dumps(obj, indent=2)


def report_to_csv(report: ExperimentReport) -> str:
    lines = ["query_index,sd,sphd,ld"]
    for r in report.rows:
        lines.append(f"{r.query_index},{r.sd!r},{r.sphd!r},{r.ld!r}")
    lines.append("")
    lines.append("metric,value")
    for k, v in report.summary.items():
        lines.append(f"{k},{v!r}")
    return "\n".join(lines) + "\n"
