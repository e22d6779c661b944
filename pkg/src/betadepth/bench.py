"""Wall-clock comparison of the depth engines across data sizes.

Times one full depth computation (translate, build, count) per engine and
size on a shared random data set. The reference engine is capped because
its pair enumeration grows quadratically; the fast engines keep going an
order of magnitude further.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .angular import spherical_depth_fast
from .betafast import beta_depth_fast
from .reference import Dataset, beta_depth_brute

DEFAULT_SIZES = (1_000, 10_000, 100_000)
DEFAULT_BRUTE_CAP = 10_000


@dataclass(frozen=True)
class BenchRow:
    n: int
    engine: str
    beta: float
    seconds: float
    raw_count: int


def time_call(fn, repeats: int = 3):
    """Median wall time of ``fn()`` over ``repeats`` runs, plus the last result."""
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def run_bench(sizes=DEFAULT_SIZES, brute_cap: int = DEFAULT_BRUTE_CAP,
              seed: int = 0, repeats: int = 3) -> list[BenchRow]:
    rng = np.random.default_rng(seed)
    rows = []
    q = (0.1, -0.2)
    # one throwaway call so kernel loading does not pollute the first row
    beta_depth_fast(q, Dataset(rng.uniform(-1.0, 1.0, size=(8, 2))), 2.0)
    for n in sizes:
        data = Dataset(rng.uniform(-10.0, 10.0, size=(n, 2)))
        secs, res = time_call(lambda: spherical_depth_fast(q, data), repeats)
        rows.append(BenchRow(n, "spherical_fast", 1.0, secs, res.raw_count))
        secs, res = time_call(lambda: beta_depth_fast(q, data, 2.0), repeats)
        rows.append(BenchRow(n, "beta_fast", 2.0, secs, res.raw_count))
        if n <= brute_cap:
            for beta in (1.0, 2.0):
                secs, res = time_call(lambda: beta_depth_brute(q, data, beta), repeats)
                rows.append(BenchRow(n, "brute", beta, secs, res.raw_count))
    return rows


def bench_to_csv(rows) -> str:
    lines = ["n,engine,beta,median_seconds,raw_count"]
    for r in rows:
        lines.append(f"{r.n},{r.engine},{r.beta!r},{r.seconds!r},{r.raw_count}")
    return "\n".join(lines) + "\n"
