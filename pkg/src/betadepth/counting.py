"""Exact range counting over a fixed planar point set.

Supports the two query shapes the fast depth engine needs: closed
halfplanes ``{b : a.b <= s}`` and closed halfplanes minus an open disk.
The structure is a kd-style tree of median splits with per-node counts and
tight bounding boxes. Nodes are pruned only when the box bound, evaluated
with the same floating-point pipeline as the leaf predicate, already
decides every point; rounding is monotone, so tree counts match a linear
scan bit for bit. The linear-scan counters are kept public as the oracle
and fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

DEFAULT_LEAF_SIZE = 16


@dataclass(frozen=True)
class HalfplaneQuery:
    """The closed set {b : a.b <= s} for a nonzero normal ``a``."""

    a: tuple[float, float]
    s: float

    def __post_init__(self):
        ax, ay = (float(c) for c in self.a)
        s = float(self.s)
        if not (math.isfinite(ax) and math.isfinite(ay) and math.isfinite(s)):
            raise ValueError("halfplane parameters must be finite")
        if ax == 0.0 and ay == 0.0:
            raise ValueError("halfplane normal must be nonzero")
        object.__setattr__(self, "a", (ax, ay))
        object.__setattr__(self, "s", s)


@dataclass(frozen=True)
class DiskQuery:
    """The open set {b : ||b - center||^2 < radius_sq}."""

    center: tuple[float, float]
    radius_sq: float

    def __post_init__(self):
        cx, cy = (float(c) for c in self.center)
        r = float(self.radius_sq)
        if not (math.isfinite(cx) and math.isfinite(cy) and math.isfinite(r)):
            raise ValueError("disk parameters must be finite")
        if r <= 0.0:
            raise ValueError("radius_sq must be positive")
        object.__setattr__(self, "center", (cx, cy))
        object.__setattr__(self, "radius_sq", r)


class CountingIndex:
    """Immutable median-split tree over planar points, leaves of bounded size.

    Points are stored reordered so every leaf owns a contiguous slice;
    internal nodes carry their subtree count and a tight bounding box.
    """

    __slots__ = ("px", "py", "leaf_size", "node_box", "node_count",
                 "node_left", "node_right", "node_start", "node_end")

    def __init__(self, points, leaf_size: int = DEFAULT_LEAF_SIZE):
        pts = np.asarray(points, dtype=np.float64)
        if pts.size == 0:
            pts = pts.reshape(0, 2)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must form an (n, 2) array")
        if not np.isfinite(pts).all():
            raise ValueError("points must have finite coordinates")
        if leaf_size < 1:
            raise ValueError("leaf_size must be at least 1")
        self.leaf_size = int(leaf_size)
        px = pts[:, 0].copy()
        py = pts[:, 1].copy()

        box, cnt, left, right, start, end = [], [], [], [], [], []

        def build(lo: int, hi: int, depth: int) -> int:
            node = len(cnt)
            m = hi - lo
            if m:
                b = (px[lo:hi].min(), px[lo:hi].max(),
                     py[lo:hi].min(), py[lo:hi].max())
            else:
                b = (0.0, 0.0, 0.0, 0.0)
            box.append(b)
            cnt.append(m)
            left.append(-1)
            right.append(-1)
            start.append(lo)
            end.append(hi)
            if m > self.leaf_size:
                axis = px if depth % 2 == 0 else py
                mid = lo + m // 2
                part = np.argpartition(axis[lo:hi], mid - lo)
                px[lo:hi] = px[lo:hi][part]
                py[lo:hi] = py[lo:hi][part]
                left[node] = build(lo, mid, depth + 1)
                right[node] = build(mid, hi, depth + 1)
            return node

        build(0, len(px), 0)
        px.setflags(write=False)
        py.setflags(write=False)
        self.px = px
        self.py = py
        self.node_box = np.array(box, dtype=np.float64)
        self.node_count = np.array(cnt, dtype=np.int64)
        self.node_left = np.array(left, dtype=np.int64)
        self.node_right = np.array(right, dtype=np.int64)
        self.node_start = np.array(start, dtype=np.int64)
        self.node_end = np.array(end, dtype=np.int64)

    @property
    def size(self) -> int:
        return self.px.shape[0]

    def __len__(self) -> int:
        return self.size


def build_counting_index(points, leaf_size: int = DEFAULT_LEAF_SIZE) -> CountingIndex:
    """Build a counting tree; deterministic for a fixed input order."""
    return CountingIndex(points, leaf_size=leaf_size)


def _as_query_arrays(normals, offsets):
    a = np.ascontiguousarray(np.asarray(normals, dtype=np.float64).reshape(-1, 2))
    s = np.ascontiguousarray(np.asarray(offsets, dtype=np.float64).reshape(-1))
    if a.shape[0] != s.shape[0]:
        raise ValueError("normals and offsets must align")
    if not (np.isfinite(a).all() and np.isfinite(s).all()):
        raise ValueError("query parameters must be finite")
    if ((a[:, 0] == 0.0) & (a[:, 1] == 0.0)).any():
        raise ValueError("halfplane normal must be nonzero")
    return a, s


try:  # compiled kernel; the numpy traversal below stays as the oracle-checked fallback
    from numba import njit as _njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


if _HAVE_NUMBA:
    @_njit(cache=True)
    def _count_kernel(box, cnt, left, right, start, end, px, py,
                      ax, ay, s, cx, cy, rsq, with_disk, out):  # pragma: no cover
        stack = np.empty(128, dtype=np.int64)
        for qi in range(ax.shape[0]):
            A = ax[qi]
            B = ay[qi]
            S = s[qi]
            CX = cx[qi]
            CY = cy[qi]
            R = rsq[qi]
            total = 0
            top = 1
            stack[0] = 0
            while top:
                top -= 1
                nd = stack[top]
                c = cnt[nd]
                if c == 0:
                    continue
                x0 = box[nd, 0]
                x1 = box[nd, 1]
                y0 = box[nd, 2]
                y1 = box[nd, 3]
                xh = x1 if A > 0.0 else x0
                yh = y1 if B > 0.0 else y0
                xl = x0 if A > 0.0 else x1
                yl = y0 if B > 0.0 else y1
                if A * xl + B * yl > S:
                    continue
                full = A * xh + B * yh <= S
                if with_disk:
                    lox = x0 - CX
                    hix = x1 - CX
                    loy = y0 - CY
                    hiy = y1 - CY
                    minx = lox if lox > 0.0 else (-hix if hix < 0.0 else 0.0)
                    miny = loy if loy > 0.0 else (-hiy if hiy < 0.0 else 0.0)
                    abs_lox = -lox if lox < 0.0 else lox
                    abs_hix = -hix if hix < 0.0 else hix
                    abs_loy = -loy if loy < 0.0 else loy
                    abs_hiy = -hiy if hiy < 0.0 else hiy
                    maxx = abs_lox if abs_lox > abs_hix else abs_hix
                    maxy = abs_loy if abs_loy > abs_hiy else abs_hiy
                    if maxx * maxx + maxy * maxy < R:
                        continue
                    if minx * minx + miny * miny < R:
                        full = False
                if full:
                    total += c
                    continue
                child = left[nd]
                if child < 0:
                    for p in range(start[nd], end[nd]):
                        bx = px[p]
                        by = py[p]
                        if A * bx + B * by <= S:
                            if with_disk:
                                dx = bx - CX
                                dy = by - CY
                                if dx * dx + dy * dy >= R:
                                    total += 1
                            else:
                                total += 1
                else:
                    stack[top] = child
                    top += 1
                    stack[top] = right[nd]
                    top += 1
            out[qi] = total


def _batch_count_numpy(index: CountingIndex, ax, ay, s, cx=None, cy=None, rsq=None):
    """Stack-based traversal, one vectorized classification per node.

    Pruning uses componentwise extreme-corner bounds evaluated with the same
    rounding pipeline as the leaf predicate; rounding is monotone, so a
    pruned node decides exactly as a per-point scan would.
    """
    with_disk = cx is not None
    mq = ax.shape[0]
    counts = np.zeros(mq, dtype=np.int64)
    if index.size == 0 or mq == 0:
        return counts
    box = index.node_box
    stack = [(0, np.arange(mq, dtype=np.int64))]
    while stack:
        node, act = stack.pop()
        cnt = int(index.node_count[node])
        if cnt == 0 or act.size == 0:
            continue
        x0, x1, y0, y1 = box[node]
        A = ax[act]
        B = ay[act]
        S = s[act]
        hmax = A * np.where(A > 0.0, x1, x0) + B * np.where(B > 0.0, y1, y0)
        hmin = A * np.where(A > 0.0, x0, x1) + B * np.where(B > 0.0, y0, y1)
        full = hmax <= S
        dead = hmin > S
        if with_disk:
            lox = x0 - cx[act]
            hix = x1 - cx[act]
            loy = y0 - cy[act]
            hiy = y1 - cy[act]
            minx = np.where(lox > 0.0, lox, np.where(hix < 0.0, -hix, 0.0))
            miny = np.where(loy > 0.0, loy, np.where(hiy < 0.0, -hiy, 0.0))
            maxx = np.maximum(np.abs(lox), np.abs(hix))
            maxy = np.maximum(np.abs(loy), np.abs(hiy))
            dmin = minx * minx + miny * miny
            dmax = maxx * maxx + maxy * maxy
            R = rsq[act]
            full &= dmin >= R
            dead |= dmax < R
        if full.any():
            counts[act[full]] += cnt
        mixed = ~(full | dead)
        if not mixed.any():
            continue
        act_m = act[mixed]
        child = int(index.node_left[node])
        if child < 0:
            lo, hi = int(index.node_start[node]), int(index.node_end[node])
            lx = index.px[lo:hi]
            ly = index.py[lo:hi]
            ok = ax[act_m, None] * lx[None, :] + ay[act_m, None] * ly[None, :] <= s[act_m, None]
            if with_disk:
                dx = lx[None, :] - cx[act_m, None]
                dy = ly[None, :] - cy[act_m, None]
                ok &= dx * dx + dy * dy >= rsq[act_m, None]
            counts[act_m] += ok.sum(axis=1)
        else:
            stack.append((child, act_m))
            stack.append((int(index.node_right[node]), act_m))
    return counts


def _locality_order(ax, ay):
    # group queries by normal direction so consecutive traversals share paths
    half = (ay < 0.0) | ((ay == 0.0) & (ax < 0.0))
    sub = ay != 0.0
    block = half.astype(np.int64) * 2 + sub.astype(np.int64)
    ratio = np.where(sub, -ax / np.where(sub, ay, 1.0), 0.0)
    return np.lexsort((ratio, block))


def _batch_count(index: CountingIndex, ax, ay, s, cx=None, cy=None, rsq=None):
    if not _HAVE_NUMBA:
        return _batch_count_numpy(index, ax, ay, s, cx, cy, rsq)
    mq = ax.shape[0]
    out = np.zeros(mq, dtype=np.int64)
    if index.size == 0 or mq == 0:
        return out
    with_disk = cx is not None
    if not with_disk:
        cx = cy = rsq = np.zeros(mq)
    order = _locality_order(ax, ay)
    permuted = np.empty(mq, dtype=np.int64)
    _count_kernel(index.node_box, index.node_count, index.node_left,
                  index.node_right, index.node_start, index.node_end,
                  index.px, index.py,
                  np.ascontiguousarray(ax[order]), np.ascontiguousarray(ay[order]),
                  np.ascontiguousarray(s[order]), np.ascontiguousarray(cx[order]),
                  np.ascontiguousarray(cy[order]), np.ascontiguousarray(rsq[order]),
                  with_disk, permuted)
    out[order] = permuted
    return out


def count_halfplane_batch(index: CountingIndex, normals, offsets) -> np.ndarray:
    """Exact counts of indexed points in each closed halfplane."""
    a, s = _as_query_arrays(normals, offsets)
    return _batch_count(index, a[:, 0], a[:, 1], s)


def count_halfplane_minus_open_disk_batch(index: CountingIndex, normals, offsets,
                                          centers, radii_sq) -> np.ndarray:
    """Exact counts of points in each closed halfplane and outside each open disk."""
    a, s = _as_query_arrays(normals, offsets)
    c = np.ascontiguousarray(np.asarray(centers, dtype=np.float64).reshape(-1, 2))
    r = np.ascontiguousarray(np.asarray(radii_sq, dtype=np.float64).reshape(-1))
    if c.shape[0] != a.shape[0] or r.shape[0] != a.shape[0]:
        raise ValueError("query arrays must align")
    if not (np.isfinite(c).all() and np.isfinite(r).all()):
        raise ValueError("query parameters must be finite")
    if (r <= 0.0).any():
        raise ValueError("radius_sq must be positive")
    return _batch_count(index, a[:, 0], a[:, 1], s, c[:, 0], c[:, 1], r)


def count_halfplane(index: CountingIndex, h: HalfplaneQuery) -> int:
    """Exact count of indexed points with ``a.b <= s``."""
    return int(count_halfplane_batch(index, [h.a], [h.s])[0])


def count_halfplane_minus_open_disk(index: CountingIndex, h: HalfplaneQuery,
                                    d: DiskQuery) -> int:
    """Exact count of points satisfying the halfplane and avoiding the open disk."""
    return int(count_halfplane_minus_open_disk_batch(
        index, [h.a], [h.s], [d.center], [d.radius_sq])[0])


def count_halfplane_scan(points, h: HalfplaneQuery) -> int:
    """Linear-scan oracle for :func:`count_halfplane`."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    ax, ay = h.a
    dots = ax * pts[:, 0] + ay * pts[:, 1]
    return int(np.count_nonzero(dots <= h.s))


def count_halfplane_minus_open_disk_scan(points, h: HalfplaneQuery, d: DiskQuery) -> int:
    """Linear-scan oracle for :func:`count_halfplane_minus_open_disk`."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    ax, ay = h.a
    cx, cy = d.center
    dots = ax * pts[:, 0] + ay * pts[:, 1]
    dx = pts[:, 0] - cx
    dy = pts[:, 1] - cy
    ok = (dots <= h.s) & (dx * dx + dy * dy >= d.radius_sq)
    return int(np.count_nonzero(ok))
