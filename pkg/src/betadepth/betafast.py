"""Fast planar beta-skeleton depth via per-point range counting.

After translating the data by ``-q``, membership of the query in the region
of a pair ``(a, b)`` reduces to two conditions on ``b`` determined by ``a``
alone: ``b`` must lie in the closed halfplane ``{a.b <= ||a||^2/(2k)}`` and
outside the open disk of center ``k*a`` and squared radius ``k^2*||a||^2``,
where ``k = beta/(2*(beta - 1))``. Summing the counts of that set over every
translated point counts each containing pair twice, so half the sum is the
depth's raw count. At ``beta == 1`` the disk term vanishes and the halfplane
offset degenerates to zero, recovering the dot-sign criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .counting import (
    DiskQuery,
    HalfplaneQuery,
    build_counting_index,
    count_halfplane_batch,
    count_halfplane_minus_open_disk_batch,
)
from .reference import DepthResult, as_dataset, _check_query, _pair_result


@dataclass(frozen=True)
class OriginQueryGeometry:
    """Halfplane/disk data reducing origin membership to conditions on the partner.

    For a nonzero ``a`` and ``beta > 1``: ``k = beta/(2*(beta-1))`` exceeds
    1/2 and tends to it as beta grows; ``p = ((beta-1)/beta)*a`` is the foot
    of the halfplane boundary; the disk has center ``c = k*a`` and squared
    radius ``r_sq = k^2*||a||^2``, so its boundary passes through the origin
    and the halfplane boundary always meets it.
    """

    a: tuple[float, float]
    beta: float
    k: float
    p: tuple[float, float]
    c: tuple[float, float]
    r_sq: float

    def halfplane_query(self) -> HalfplaneQuery:
        ax, ay = self.a
        nsq = ax * ax + ay * ay
        return HalfplaneQuery(a=self.a, s=nsq / (2.0 * self.k))

    def open_disk_query(self) -> DiskQuery:
        return DiskQuery(center=self.c, radius_sq=self.r_sq)


def origin_query_geometry(a: Sequence[float], beta: float) -> OriginQueryGeometry:
    """Derive the per-point query geometry for ``beta > 1`` and nonzero ``a``."""
    ax, ay = (float(c) for c in a)
    if not (math.isfinite(ax) and math.isfinite(ay)):
        raise ValueError("a must have finite coordinates")
    if ax == 0.0 and ay == 0.0:
        raise ValueError("a must be nonzero")
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 1.0:
        raise ValueError(f"beta must be a finite real > 1, got {beta!r}")
    k = beta / (2.0 * (beta - 1.0))
    w = (beta - 1.0) / beta
    nsq = ax * ax + ay * ay
    return OriginQueryGeometry(
        a=(ax, ay), beta=beta, k=k,
        p=(w * ax, w * ay),
        c=(k * ax, k * ay),
        r_sq=(k * k) * nsq,
    )


def origin_in_region(a: Sequence[float], b: Sequence[float], beta: float) -> bool:
    """Does the influence region of ``a`` and ``b`` contain the origin?

    Decided through the halfplane/disk reduction; agrees with the direct
    closed membership test of :func:`betadepth.geometry.contains` at the
    origin. Requires nonzero points and ``beta > 1``.
    """
    g = origin_query_geometry(a, beta)
    bx, by = (float(c) for c in b)
    if not (math.isfinite(bx) and math.isfinite(by)):
        raise ValueError("b must have finite coordinates")
    if bx == 0.0 and by == 0.0:
        raise ValueError("b must be nonzero")
    ax, ay = g.a
    nsq = ax * ax + ay * ay
    if ax * bx + ay * by > nsq / (2.0 * g.k):
        return False
    dx = bx - g.c[0]
    dy = by - g.c[1]
    return dx * dx + dy * dy >= g.r_sq


def beta_depth_fast(q: Sequence[float], S, beta: float,
                    leaf_size: int | None = None) -> DepthResult:
    """Planar beta-skeleton depth through range counting; matches the oracle.

    Builds one counting tree over the nonzero translated points and runs all
    per-point queries as a batch. A point never satisfies its own query for
    any ``beta >= 1``, so no self-count correction applies. Points coincident
    with ``q`` are held out and their pairs added in closed form, as in the
    spherical engine.
    """
    S = as_dataset(S)
    if S.d != 2:
        raise ValueError("the fast engine is planar only")
    if S.n < 2:
        raise ValueError("pair depth needs at least 2 data points")
    beta = float(beta)
    if not math.isfinite(beta) or beta < 1.0:
        raise ValueError(f"beta must be a finite real >= 1, got {beta!r}")
    qa = _check_query(q, S)

    v = S.points - qa
    nz = (v[:, 0] != 0.0) | (v[:, 1] != 0.0)
    m = int(S.n - np.count_nonzero(nz))
    B = np.ascontiguousarray(v[nz])
    pair_raw = 0
    if B.shape[0]:
        kwargs = {} if leaf_size is None else {"leaf_size": leaf_size}
        index = build_counting_index(B, **kwargs)
        bx, by = B[:, 0], B[:, 1]
        nsq = bx * bx + by * by
        if beta == 1.0:
            cnts = count_halfplane_batch(index, B, np.zeros(B.shape[0]))
        else:
            k = beta / (2.0 * (beta - 1.0))
            s = nsq / (2.0 * k)
            centers = np.column_stack((k * bx, k * by))
            rsq = (k * k) * nsq
            ok = rsq > 0.0  # squared norm can underflow for near-query points
            if ok.all():
                cnts = count_halfplane_minus_open_disk_batch(
                    index, B, s, centers, rsq)
            else:
                cnts = np.zeros(B.shape[0], dtype=np.int64)
                cnts[ok] = count_halfplane_minus_open_disk_batch(
                    index, B[ok], s[ok], centers[ok], rsq[ok])
                cnts[~ok] = count_halfplane_batch(index, B[~ok], s[~ok])
        total = int(cnts.sum())
        if total % 2 != 0:
            raise AssertionError("internal inconsistency: pair sum is odd")
        pair_raw = total // 2
    n = S.n
    raw = pair_raw + m * (n - m) + m * (m - 1) // 2
    return _pair_result(raw, n, "beta_fast", beta)
