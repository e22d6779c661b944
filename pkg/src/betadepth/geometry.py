"""Influence-region geometry and the exact predicates shared by every engine.

For two points ``xi``, ``xj`` and a parameter ``beta >= 1``, the influence
region is the intersection of two balls of radius ``(beta/2)*||xi - xj||``
whose centers are the affine combinations

    ci = (beta/2)*xi + (1 - beta/2)*xj
    cj = (1 - beta/2)*xi + (beta/2)*xj

Membership is closed: boundary points count. All predicates compare squared
norms and dot products; no square roots enter a decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

Point = tuple[float, ...]

ACUTE = "acute"
RIGHT = "right"
OBTUSE_OR_STRAIGHT = "obtuse_or_straight"


def as_point(p: Sequence[float], dim: int | None = None) -> Point:
    """Validate and normalize a coordinate sequence into a tuple of floats.

    Rejects NaN/infinite coordinates and, when ``dim`` is given, any
    dimension mismatch.
    """
    q = tuple(float(c) for c in p)
    if not q:
        raise ValueError("point must have at least one coordinate")
    for c in q:
        if not math.isfinite(c):
            raise ValueError(f"non-finite coordinate {c!r} in point {q!r}")
    if dim is not None and len(q) != dim:
        raise ValueError(f"expected a {dim}-dimensional point, got {len(q)}")
    return q


@dataclass(frozen=True)
class InfluenceRegion:
    """The lens-shaped region of a point pair: B(ci, r) intersected with B(cj, r).

    ``r`` equals ``(beta/2)*||xi - xj||``; the center separation satisfies
    ``||ci - cj|| == (beta - 1)*||xi - xj||``.
    """

    xi: Point
    xj: Point
    beta: float
    ci: Point
    cj: Point
    r: float


def influence_region(xi: Sequence[float], xj: Sequence[float], beta: float) -> InfluenceRegion:
    """Build the influence region of ``xi`` and ``xj`` for ``beta >= 1``."""
    a = as_point(xi)
    b = as_point(xj, dim=len(a))
    beta = float(beta)
    if not math.isfinite(beta) or beta < 1.0:
        raise ValueError(f"beta must be a finite real >= 1, got {beta!r}")
    m = beta / 2.0
    ci = tuple(m * ac + (1.0 - m) * bc for ac, bc in zip(a, b))
    cj = tuple((1.0 - m) * ac + m * bc for ac, bc in zip(a, b))
    dist_sq = sum((ac - bc) ** 2 for ac, bc in zip(a, b))
    r = m * math.sqrt(dist_sq)
    return InfluenceRegion(xi=a, xj=b, beta=beta, ci=ci, cj=cj, r=r)


def contains(region: InfluenceRegion, q: Sequence[float]) -> bool:
    """Closed membership test: is ``q`` inside the region (boundary included)?

    Equivalent to ``beta*||xi - xj||/2 >= max(||q - ci||, ||q - cj||)``,
    evaluated on squared quantities. The arithmetic works on the translated
    vectors ``xi - q`` and ``xj - q`` so that a query coinciding with an
    endpoint, or a degenerate pair ``xi == xj``, is decided exactly: an
    endpoint always lies on the closed region, and the degenerate region is
    the single point ``{xi}``.
    """
    p = as_point(q, dim=len(region.xi))
    m = region.beta / 2.0
    w = 1.0 - m
    r_sq = 0.0
    ci_sq = 0.0
    cj_sq = 0.0
    for xic, xjc, qc in zip(region.xi, region.xj, p):
        u = xic - qc
        v = xjc - qc
        rc = m * (u - v)
        cic = m * u + w * v
        cjc = w * u + m * v
        r_sq += rc * rc
        ci_sq += cic * cic
        cj_sq += cjc * cjc
    return r_sq >= ci_sq and r_sq >= cj_sq


def angle_at_origin_classification(u: Sequence[float], v: Sequence[float]) -> str:
    """Classify the angle spanned by ``u`` and ``v`` at the origin.

    Returns ``"acute"``, ``"right"``, or ``"obtuse_or_straight"`` from the
    sign of the dot product. Exact for inputs whose products do not overflow.
    """
    a = as_point(u, dim=2)
    b = as_point(v, dim=2)
    if a == (0.0, 0.0) or b == (0.0, 0.0):
        raise ValueError("angle classification needs nonzero vectors")
    d = a[0] * b[0] + a[1] * b[1]
    if d > 0.0:
        return ACUTE
    if d == 0.0:
        return RIGHT
    return OBTUSE_OR_STRAIGHT
