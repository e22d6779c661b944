"""Fast planar spherical depth via an angular sweep.

Translating the data by ``-q`` turns the membership test for the diametral
disk of a pair into a sign test: the pair's region contains ``q`` exactly
when the two translated vectors span a right or wider angle at the origin.
Sorting the translated vectors counterclockwise therefore reduces the whole
count to, per vector, the size of the closed circular arc a quarter turn to
three quarter turns away -- which two binary searches deliver.

No angle value is ever materialized for a comparison. The sort key is the
pair (half-plane, -x/y): within each open half-plane the negated cotangent
grows strictly with the angle, and it is exact under division rounding for
proportional vectors, so equal-angle groups stay contiguous. Arc boundary
ties are decided by the sign of the dot product itself, which the ratio
comparison against a rotated query vector reproduces bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .reference import DepthResult, as_dataset, _check_query, _pair_result


def _angular_keys(vx: np.ndarray, vy: np.ndarray):
    """Block id in {0: +x axis, 1: upper half, 2: -x axis, 3: lower half} and ratio."""
    half = (vy < 0.0) | ((vy == 0.0) & (vx < 0.0))
    sub = vy != 0.0
    block = half.astype(np.int64) * 2 + sub.astype(np.int64)
    safe = np.where(sub, vy, 1.0)
    ratio = np.where(sub, -vx / safe, 0.0)
    return block, ratio


@dataclass(frozen=True)
class SortedAngularIndex:
    """Nonzero translated vectors in counterclockwise angular order.

    ``original_indices`` maps sorted positions back to dataset rows; ties in
    angle keep ascending original index. Points equal to the query are held
    out and only tallied in ``zero_count``.
    """

    vectors: np.ndarray
    original_indices: np.ndarray
    zero_count: int
    _block: np.ndarray = field(repr=False)
    _ratio: np.ndarray = field(repr=False)
    _block_starts: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.vectors.shape[0]

    @property
    def n(self) -> int:
        return len(self) + self.zero_count

    def thetas(self) -> np.ndarray:
        """Angles in [0, 2*pi), for inspection only; never used in decisions."""
        t = np.arctan2(self.vectors[:, 1], self.vectors[:, 0])
        return np.where(t < 0.0, t + 2.0 * np.pi, t)


def build_index(q: Sequence[float], S) -> SortedAngularIndex:
    """Translate the dataset by ``-q`` and sort the nonzero vectors by angle."""
    S = as_dataset(S)
    if S.d != 2:
        raise ValueError("the angular index is planar only")
    if S.n < 2:
        raise ValueError("need at least 2 data points")
    qa = _check_query(q, S)

    v = S.points - qa
    nz = (v[:, 0] != 0.0) | (v[:, 1] != 0.0)
    zero_count = int(S.n - np.count_nonzero(nz))
    vv = v[nz]
    idx = np.nonzero(nz)[0]

    block, ratio = _angular_keys(vv[:, 0], vv[:, 1])
    order = np.lexsort((ratio, block))  # stable: equal keys keep index order
    block_s = block[order]
    starts = np.searchsorted(block_s, np.arange(5), side="left")
    vec = np.ascontiguousarray(vv[order])
    vec.setflags(write=False)
    return SortedAngularIndex(
        vectors=vec,
        original_indices=idx[order],
        zero_count=zero_count,
        _block=block_s,
        _ratio=np.ascontiguousarray(ratio[order]),
        _block_starts=starts,
    )


def _positions(index: SortedAngularIndex, ux: np.ndarray, uy: np.ndarray):
    """Counts of entries angularly strictly-before / up-to each query vector."""
    block, ratio = _angular_keys(ux, uy)
    lt = np.empty(ux.shape[0], dtype=np.int64)
    le = np.empty(ux.shape[0], dtype=np.int64)
    starts = index._block_starts
    for b in range(4):
        mask = block == b
        if not mask.any():
            continue
        lo, hi = int(starts[b]), int(starts[b + 1])
        if b % 2 == 0:  # an exact axis direction: the whole block ties
            lt[mask] = lo
            le[mask] = hi
        else:
            seg = index._ratio[lo:hi]
            lt[mask] = lo + np.searchsorted(seg, ratio[mask], side="left")
            le[mask] = lo + np.searchsorted(seg, ratio[mask], side="right")
    return lt, le


def _opposition_counts(index: SortedAngularIndex, pos: np.ndarray) -> np.ndarray:
    """Vectorized |O_i| for the given sorted positions."""
    v = index.vectors[pos]
    vx, vy = v[:, 0], v[:, 1]
    # closed arc from a quarter turn ahead to a quarter turn behind
    u1x, u1y = -vy, vx
    u2x, u2y = vy, -vx
    lt1, _ = _positions(index, u1x, u1y)
    _, le2 = _positions(index, u2x, u2y)
    wraps = (u1y < 0.0) | ((u1y == 0.0) & (u1x < 0.0))
    n_entries = len(index)
    return np.where(wraps, (n_entries - lt1) + le2, le2 - lt1)


def opposition_count(index: SortedAngularIndex, i: int) -> int:
    """Number of entries whose angle to entry ``i`` is at least a quarter turn.

    Exactly the entries with a nonpositive dot product against entry ``i``,
    located with two binary searches against the sorted order.
    """
    if not 0 <= i < len(index):
        raise IndexError(f"entry position {i} out of range")
    return int(_opposition_counts(index, np.array([i]))[0])


def spherical_depth_fast(q: Sequence[float], S) -> DepthResult:
    """Planar spherical depth by angular sweep; equals the pair oracle exactly.

    Pairs involving a point coincident with ``q`` always contain ``q`` (the
    endpoints lie on the closed region), so the held-out zeros contribute
    ``zero_count*(n - zero_count) + C(zero_count, 2)`` in closed form.
    """
    index = build_index(q, S)
    n = index.n
    m = index.zero_count
    total = 0
    if len(index):
        opp = _opposition_counts(index, np.arange(len(index)))
        s = int(opp.sum())
        if s % 2 != 0:
            raise AssertionError("internal inconsistency: opposition sum is odd")
        total = s // 2
    raw = total + m * (n - m) + m * (m - 1) // 2
    return _pair_result(raw, n, "spherical_fast", 1.0)
