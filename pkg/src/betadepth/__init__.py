"""Beta-skeleton data depth.

For ``beta >= 1``, the beta-skeleton depth of a query point with respect to
a data set is the fraction of point pairs whose influence region (the
intersection of two balls of radius ``(beta/2)*||xi - xj||``) contains the
query. ``beta = 1`` gives spherical depth (diametral balls), ``beta = 2``
lens depth. This package provides:

- exact closed-region geometry predicates (:mod:`betadepth.geometry`);
- reference engines enumerating all pairs (any dimension) and all planar
  triangles (:mod:`betadepth.reference`);
- a fast planar spherical engine built on an angular sweep
  (:mod:`betadepth.angular`);
- a fast planar engine for any ``beta >= 1`` built on halfplane/disk range
  counting (:mod:`betadepth.betafast`, :mod:`betadepth.counting`);
- point-set gadgets that decide element uniqueness from depth counts
  (:mod:`betadepth.gadgets`);
- a reproducible experiment harness and a benchmark table
  (:mod:`betadepth.experiment`, :mod:`betadepth.bench`), also exposed by
  the ``betadepth`` command-line tool (:mod:`betadepth.cli`).

All engines share closed-region semantics and integer raw counts; the fast
engines reproduce the reference counts exactly.
"""

from .angular import SortedAngularIndex, build_index, opposition_count, spherical_depth_fast
from .betafast import OriginQueryGeometry, beta_depth_fast, origin_in_region, origin_query_geometry
from .counting import (
    CountingIndex,
    DiskQuery,
    HalfplaneQuery,
    build_counting_index,
    count_halfplane,
    count_halfplane_batch,
    count_halfplane_minus_open_disk,
    count_halfplane_minus_open_disk_batch,
    count_halfplane_minus_open_disk_scan,
    count_halfplane_scan,
)
from .experiment import ExperimentReport, ExperimentRow, run_experiment
from .gadgets import (
    build_angle_gadget,
    build_spherical_gadget,
    build_uniqueness_gadget,
    decide_uniqueness_lens,
    decide_uniqueness_spherical,
    uniqueness_rotation_angle,
)
from .geometry import (
    InfluenceRegion,
    angle_at_origin_classification,
    contains,
    influence_region,
)
from .reference import Dataset, DepthResult, as_dataset, beta_depth_brute, simplicial_depth_brute

__version__ = "0.1.0"

__all__ = [
    "CountingIndex",
    "Dataset",
    "DepthResult",
    "DiskQuery",
    "ExperimentReport",
    "ExperimentRow",
    "HalfplaneQuery",
    "InfluenceRegion",
    "OriginQueryGeometry",
    "SortedAngularIndex",
    "angle_at_origin_classification",
    "as_dataset",
    "beta_depth_brute",
    "beta_depth_fast",
    "build_angle_gadget",
    "build_counting_index",
    "build_index",
    "build_spherical_gadget",
    "build_uniqueness_gadget",
    "contains",
    "count_halfplane",
    "count_halfplane_batch",
    "count_halfplane_minus_open_disk",
    "count_halfplane_minus_open_disk_batch",
    "count_halfplane_minus_open_disk_scan",
    "count_halfplane_scan",
    "decide_uniqueness_lens",
    "decide_uniqueness_spherical",
    "influence_region",
    "opposition_count",
    "origin_in_region",
    "origin_query_geometry",
    "run_experiment",
    "simplicial_depth_brute",
    "spherical_depth_fast",
    "uniqueness_rotation_angle",
    "__version__",
]
