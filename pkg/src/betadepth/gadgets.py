"""Point-set gadgets that turn depth counts into duplicate detectors.

Given a list of positive reals, each builder places rotated copies of the
values on rays through the origin so that, with all values distinct, the
depth raw count of the origin hits a closed-form target; every duplicated
value pushes the count strictly above it. The builders avoid trigonometry
where exactness matters: the four-fold gadget is assembled from exact
rotation images, and the two-ray gadget backs the rotation cosine off by a
few ulps so that the touching pairs land strictly inside their regions
under floating-point evaluation while the closed-form counts still hold.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .angular import spherical_depth_fast
from .betafast import beta_depth_fast
from .reference import Dataset

_COS_BACKOFF_STEPS = 32

ORIGIN = (0.0, 0.0)


def _positive_values(values: Sequence[float], shift: bool) -> list[float]:
    vals = [float(v) for v in values]
    if len(vals) < 2:
        raise ValueError("need at least 2 values")
    for v in vals:
        if not math.isfinite(v):
            raise ValueError(f"values must be finite, got {v!r}")
    lo = min(vals)
    if lo <= 0.0:
        if not shift:
            raise ValueError(f"values must be positive, got {lo!r}")
        offset = lo - 1.0
        vals = [v - offset for v in vals]
    return vals


def build_spherical_gadget(values: Sequence[float]) -> Dataset:
    """Four rotated copies of each value: (a,1), (-1,a), (-a,-1), (1,-a).

    These are the successive quarter-turn images of (a, 1), written in exact
    Cartesian form. With distinct positive values the spherical raw count of
    the origin is ``4n^2 + 2n``; each duplicated pair adds at least 4.
    """
    vals = _positive_values(values, shift=False)
    pts = []
    for a in vals:
        pts.append((a, 1.0))
    for a in vals:
        pts.append((-1.0, a))
    for a in vals:
        pts.append((-a, -1.0))
    for a in vals:
        pts.append((1.0, -a))
    return Dataset(np.array(pts, dtype=np.float64))


def build_angle_gadget(values: Sequence[float], theta: float) -> Dataset:
    """Two rays through the origin: (b, 0) and b*(cos theta, sin theta).

    General-purpose construction; for fixture-exact counts use
    :func:`build_uniqueness_gadget`, which calibrates the rotation.
    """
    theta = float(theta)
    if not (0.0 < theta < math.pi):
        raise ValueError(f"theta must lie strictly between 0 and pi, got {theta!r}")
    return _two_ray_points(_positive_values(values, shift=False),
                           math.cos(theta), math.sin(theta))


def _two_ray_points(vals: list[float], c: float, s: float) -> Dataset:
    pts = [(b, 0.0) for b in vals] + [(b * c, b * s) for b in vals]
    return Dataset(np.array(pts, dtype=np.float64))


def uniqueness_rotation_angle(beta: float) -> float:
    """The rotation angle acos(1 - 1/beta) that makes same-value pairs critical."""
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 1.0:
        raise ValueError(f"beta must be a finite real > 1, got {beta!r}")
    return math.acos(1.0 - 1.0 / beta)


def _calibrated_cos_sin(beta: float) -> tuple[float, float]:
    # Back the cosine off toward zero so each value's rotated partner pair,
    # mathematically tangent to the origin, decides as strictly containing
    # under rounding; the perturbation is far below any honest value gap.
    c = 1.0 - 1.0 / float(beta)
    for _ in range(_COS_BACKOFF_STEPS):
        c = math.nextafter(c, 0.0)
    return c, math.sqrt(1.0 - c * c)


def build_uniqueness_gadget(values: Sequence[float], beta: float,
                            shift_nonpositive: bool = True) -> Dataset:
    """Two-ray gadget whose rotation is calibrated for exact fixture counts.

    With distinct positive values, the beta-skeleton raw count of the origin
    is exactly ``n``; it is ``n + 2c`` with ``c`` duplicated pairs. Values
    closer than a few dozen ulps relative are treated as duplicates.
    """
    beta = float(beta)
    if not math.isfinite(beta) or beta <= 1.0:
        raise ValueError(f"beta must be a finite real > 1, got {beta!r}")
    vals = _positive_values(values, shift=shift_nonpositive)
    c, s = _calibrated_cos_sin(beta)
    return _two_ray_points(vals, c, s)


def decide_uniqueness_spherical(values: Sequence[float]) -> bool:
    """True iff all values are distinct, decided from the spherical count."""
    vals = _positive_values(values, shift=True)
    n = len(vals)
    gadget = build_spherical_gadget(vals)
    raw = spherical_depth_fast(ORIGIN, gadget).raw_count
    return raw == 4 * n * n + 2 * n


def decide_uniqueness_lens(values: Sequence[float]) -> tuple[bool, int]:
    """Uniqueness decision plus the number of duplicated pairs, via lens depth."""
    vals = _positive_values(values, shift=True)
    n = len(vals)
    gadget = build_uniqueness_gadget(vals, beta=2.0)
    raw = beta_depth_fast(ORIGIN, gadget, 2.0).raw_count
    return raw == n, (raw - n) // 2
