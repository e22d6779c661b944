"""Reference depth engines: exhaustive pair and triangle counting.

These are the oracles the fast planar engines are checked against. The pair
engine works in any dimension and costs O(d*n^2); the triangle engine is
planar and costs O(n^3). Both enumerate every subset and apply the exact
closed-region predicates, vectorized in chunks so large instances stay
within memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

_PAIR_CHUNK = 1_000_000
_TRIPLE_CHUNK = 1_000_000


@dataclass(frozen=True)
class Dataset:
    """An ordered multiset of points sharing one dimension.

    Duplicate rows are legitimate and counted as distinct members.
    """

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] < 1:
            raise ValueError("points must form an (n, d) array with d >= 1")
        if not np.isfinite(pts).all():
            raise ValueError("points must have finite coordinates")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def d(self) -> int:
        return self.points.shape[1]


def as_dataset(points) -> Dataset:
    """Coerce an array-like (or pass through a Dataset) into a Dataset."""
    if isinstance(points, Dataset):
        return points
    return Dataset(np.asarray(points, dtype=np.float64))


@dataclass(frozen=True)
class DepthResult:
    """An integer containment count plus its normalized depth value.

    ``normalized`` is ``raw_count / C(n, 2)`` for pair-based depths and
    ``raw_count / C(n, 3)`` for the triangle-based one. ``beta`` holds the
    depth parameter, or the marker string ``"simplicial"``.
    """

    raw_count: int
    normalized: float
    n: int
    method: str
    beta: float | str


def _pair_result(raw: int, n: int, method: str, beta: float) -> DepthResult:
    return DepthResult(raw_count=raw, normalized=raw / math.comb(n, 2), n=n,
                       method=method, beta=beta)


def _check_query(q, S: Dataset) -> np.ndarray:
    qa = np.asarray(q, dtype=np.float64).reshape(-1)
    if qa.shape[0] != S.d:
        raise ValueError(f"query has dimension {qa.shape[0]}, data has {S.d}")
    if not np.isfinite(qa).all():
        raise ValueError("query must have finite coordinates")
    return qa


def beta_depth_brute(q: Sequence[float], S, beta: float) -> DepthResult:
    """Count influence regions over all point pairs that contain ``q``.

    The per-pair decision is the closed membership test of
    :func:`betadepth.geometry.contains`, evaluated on the translated vectors
    ``xi - q`` and ``xj - q`` with identical arithmetic, chunk-vectorized.
    """
    S = as_dataset(S)
    beta = float(beta)
    if not math.isfinite(beta) or beta < 1.0:
        raise ValueError(f"beta must be a finite real >= 1, got {beta!r}")
    if S.n < 2:
        raise ValueError("pair depth needs at least 2 data points")
    qa = _check_query(q, S)

    u = S.points - qa
    m = beta / 2.0
    w = 1.0 - m
    n = S.n
    raw = 0
    rows = max(1, _PAIR_CHUNK // n)
    for i0 in range(0, n - 1, rows):
        i1 = min(i0 + rows, n - 1)
        U = u[i0:i1, None, :]
        V = u[None, i0 + 1:, :]
        rc = m * (U - V)
        cic = m * U + w * V
        cjc = w * U + m * V
        r_sq = np.sum(rc * rc, axis=2)
        ci_sq = np.sum(cic * cic, axis=2)
        cj_sq = np.sum(cjc * cjc, axis=2)
        ok = (r_sq >= ci_sq) & (r_sq >= cj_sq)
        valid = np.arange(i0 + 1, n)[None, :] > np.arange(i0, i1)[:, None]
        raw += int(np.count_nonzero(ok & valid))
    return _pair_result(raw, n, "brute", beta)


@lru_cache(maxsize=4)
def _triple_indices(n: int) -> np.ndarray:
    # all 3-combinations of range(n), built row-block by row-block
    out = np.empty((math.comb(n, 3), 3), dtype=np.int32)
    pos = 0
    for i in range(n - 2):
        jj, kk = np.triu_indices(n - i - 1, k=1)
        cnt = jj.shape[0]
        out[pos:pos + cnt, 0] = i
        out[pos:pos + cnt, 1] = jj + i + 1
        out[pos:pos + cnt, 2] = kk + i + 1
        pos += cnt
    assert pos == out.shape[0]
    out.setflags(write=False)
    return out


def simplicial_depth_brute(q: Sequence[float], S) -> DepthResult:
    """Count closed triangles over all 3-subsets of a planar set containing ``q``.

    A triangle contains ``q`` when its three edge orientation signs around
    ``q`` are all >= 0 or all <= 0. A fully degenerate triple (all signs
    zero: the points and ``q`` share a line) counts only when ``q`` lies
    within the triple's bounding box, i.e. on the spanned segment.
    """
    S = as_dataset(S)
    if S.d != 2:
        raise ValueError("the triangle engine is planar only")
    if S.n < 3:
        raise ValueError("triangle depth needs at least 3 data points")
    qa = _check_query(q, S)

    v = S.points - qa
    vx, vy = v[:, 0], v[:, 1]
    cross = vx[:, None] * vy[None, :] - vy[:, None] * vx[None, :]
    sign = np.sign(cross).astype(np.int8)

    triples = _triple_indices(S.n)
    raw = 0
    for lo in range(0, triples.shape[0], _TRIPLE_CHUNK):
        t = triples[lo:lo + _TRIPLE_CHUNK]
        i, j, k = t[:, 0], t[:, 1], t[:, 2]
        s_ij = sign[i, j]
        s_jk = sign[j, k]
        s_ki = sign[k, i]
        nonneg = (s_ij >= 0) & (s_jk >= 0) & (s_ki >= 0)
        nonpos = (s_ij <= 0) & (s_jk <= 0) & (s_ki <= 0)
        inside = nonneg | nonpos
        degen = nonneg & nonpos  # all three signs zero
        if degen.any():
            di, dj, dk = i[degen], j[degen], k[degen]
            xs = np.stack([vx[di], vx[dj], vx[dk]])
            ys = np.stack([vy[di], vy[dj], vy[dk]])
            on_span = ((xs.min(axis=0) <= 0.0) & (xs.max(axis=0) >= 0.0)
                       & (ys.min(axis=0) <= 0.0) & (ys.max(axis=0) >= 0.0))
            inside[degen] = on_span
        raw += int(np.count_nonzero(inside))
    return DepthResult(raw_count=raw, normalized=raw / math.comb(S.n, 3),
                       n=S.n, method="brute", beta="simplicial")
