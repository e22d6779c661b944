import math

import numpy as np
import pytest

from betadepth.geometry import contains, influence_region
from betadepth.reference import (
    Dataset,
    beta_depth_brute,
    simplicial_depth_brute,
)

SQUARE = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def test_square_all_pairs_contain_origin():
    for beta in (1.0, 2.0):
        res = beta_depth_brute((0, 0), SQUARE, beta)
        assert res.raw_count == 6
        assert res.normalized == 1.0
        assert res.n == 4
        assert res.method == "brute"
        assert res.beta == beta


def test_far_query_counts_nothing():
    res = beta_depth_brute((10, 10), [(1, 0), (0, 1)], 1.0)
    assert res.raw_count == 0
    assert res.normalized == 0.0


def test_brute_matches_scalar_predicate_loop():
    rng = np.random.default_rng(5)
    for trial in range(40):
        n = int(rng.integers(2, 25))
        pts = rng.uniform(-10, 10, (n, 2))
        q = rng.uniform(-10, 10, 2)
        if trial % 4 == 0:
            pts[0] = q
        if trial % 5 == 0 and n > 2:
            pts[1] = pts[-1]
        beta = float(rng.uniform(1.0, 6.0))
        want = sum(
            contains(influence_region(pts[i], pts[j], beta), q)
            for i in range(n) for j in range(i + 1, n))
        assert beta_depth_brute(q, pts, beta).raw_count == want


def test_brute_higher_dimension():
    rng = np.random.default_rng(6)
    pts = rng.uniform(-5, 5, (12, 5))
    q = rng.uniform(-5, 5, 5)
    res = beta_depth_brute(q, pts, 2.0)
    want = sum(
        contains(influence_region(pts[i], pts[j], 2.0), q)
        for i in range(12) for j in range(i + 1, 12))
    assert res.raw_count == want
    assert 0.0 <= res.normalized <= 1.0


def test_brute_input_validation():
    with pytest.raises(ValueError):
        beta_depth_brute((0, 0), [(1, 1)], 1.0)  # n < 2
    with pytest.raises(ValueError):
        beta_depth_brute((0, 0, 0), SQUARE, 1.0)  # dimension mismatch
    with pytest.raises(ValueError):
        beta_depth_brute((0, 0), SQUARE, 0.9)
    with pytest.raises(ValueError):
        Dataset(np.array([[1.0, float("nan")]]))


def test_duplicates_count_as_distinct_members():
    pts = [(1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0)]
    # both duplicate pairs with (1,0) contain the origin
    assert beta_depth_brute((0, 0), pts, 1.0).raw_count == 2


def test_simplicial_single_triangle():
    res = simplicial_depth_brute((0, 0), [(1, 0), (-1, 1), (-1, -1)])
    assert res.raw_count == 1
    assert res.normalized == 1.0
    assert res.beta == "simplicial"
    assert simplicial_depth_brute((5, 5), [(1, 0), (-1, 1), (-1, -1)]).raw_count == 0


def test_simplicial_square_boundary_counts():
    res = simplicial_depth_brute((0, 0), SQUARE)
    assert res.raw_count == 4
    assert res.normalized == 1.0


def test_simplicial_degenerate_collinear():
    pts = [(-1.0, 0.0), (1.0, 0.0), (2.0, 0.0), (0.0, 5.0)]
    # the fully collinear triple spans the origin, so it counts
    r = simplicial_depth_brute((0, 0), pts[:3])
    assert r.raw_count == 1
    # origin on the line but outside the spanned segment: no count
    r2 = simplicial_depth_brute((0, 0), [(1.0, 0.0), (2.0, 0.0), (3.0, 0.0)])
    assert r2.raw_count == 0


def test_simplicial_validation():
    with pytest.raises(ValueError):
        simplicial_depth_brute((0, 0), [(1, 0), (0, 1)])  # n < 3
    with pytest.raises(ValueError):
        simplicial_depth_brute((0, 0, 0), np.zeros((4, 3)))  # planar only


def test_lens_dominates_spherical_counts():
    rng = np.random.default_rng(8)
    for _ in range(60):
        n = int(rng.integers(2, 40))
        pts = rng.uniform(-10, 10, (n, 2))
        q = rng.uniform(-12, 12, 2)
        assert (beta_depth_brute(q, pts, 1.0).raw_count
                <= beta_depth_brute(q, pts, 2.0).raw_count)


def test_triangle_containment_implies_two_spherical_regions():
    # for q in a closed triangle, at least 2 of the 3 diametral balls hold q
    rng = np.random.default_rng(9)
    checked = 0
    while checked < 1000:
        a, b, c = rng.uniform(-10, 10, (3, 2))
        q = rng.uniform(-10, 10, 2)
        if simplicial_depth_brute(q, [a, b, c]).raw_count != 1:
            continue
        hits = sum(contains(influence_region(u, v, 1.0), q)
                   for u, v in ((a, b), (a, c), (b, c)))
        assert hits >= 2
        checked += 1


def test_pair_to_triangle_count_ratio_bound():
    # containing balls vs containing triangles: ratio at least 2/(n-2)
    rng = np.random.default_rng(10)
    done = 0
    while done < 50:
        n = int(rng.integers(4, 31))
        pts = rng.uniform(-10, 10, (n, 2))
        q = pts[rng.integers(0, n)] * 0.8 + rng.uniform(-1, 1, 2)
        s_in = simplicial_depth_brute(q, pts).raw_count
        if s_in == 0:
            continue
        b_in = beta_depth_brute(q, pts, 1.0).raw_count
        assert b_in * (n - 2) >= 2 * s_in
        done += 1


def test_spherical_at_least_two_thirds_simplicial():
    rng = np.random.default_rng(12)
    for _ in range(40):
        n = int(rng.integers(4, 25))
        pts = rng.uniform(-10, 10, (n, 2))
        q = rng.uniform(-10, 10, 2)
        sph = beta_depth_brute(q, pts, 1.0).raw_count
        sd = simplicial_depth_brute(q, pts).raw_count
        # 3 * C(n,3) * sph >= 2 * C(n,2) * sd, compared in exact integers
        assert 3 * math.comb(n, 3) * sph >= 2 * math.comb(n, 2) * sd
