import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betadepth.geometry import (
    ACUTE,
    OBTUSE_OR_STRAIGHT,
    RIGHT,
    angle_at_origin_classification,
    contains,
    influence_region,
)

coords = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)
points2 = st.tuples(coords, coords)


def test_region_beta_one_is_diametral_ball():
    r = influence_region((0, 0), (2, 0), 1.0)
    assert r.ci == (1.0, 0.0)
    assert r.cj == (1.0, 0.0)
    assert r.r == 1.0


def test_region_beta_two_centers_at_endpoints():
    r = influence_region((0, 0), (2, 0), 2.0)
    assert r.ci == (0.0, 0.0)
    assert r.cj == (2.0, 0.0)
    assert r.r == 2.0


def test_region_beta_three():
    r = influence_region((0, 0), (2, 0), 3.0)
    assert r.ci == (-1.0, 0.0)
    assert r.cj == (3.0, 0.0)
    assert r.r == 3.0
    # center separation is (beta - 1) times the pair distance
    sep = math.dist(r.ci, r.cj)
    assert sep == pytest.approx(2.0 * (3.0 - 1.0))


def test_region_rejects_bad_inputs():
    with pytest.raises(ValueError):
        influence_region((0, 0), (1, 0, 0), 1.0)
    with pytest.raises(ValueError):
        influence_region((0, 0), (1, 0), 0.5)
    with pytest.raises(ValueError):
        influence_region((0, float("nan")), (1, 0), 1.0)
    with pytest.raises(ValueError):
        influence_region((0, float("inf")), (1, 0), 2.0)


def test_contains_boundary_and_outside():
    r = influence_region((0, 0), (2, 0), 1.0)
    assert contains(r, (1, 1))           # on the boundary circle
    assert not contains(r, (1, 1.0001))  # just outside
    r2 = influence_region((0, 0), (2, 0), 2.0)
    assert contains(r2, (1, 1))


def test_contains_endpoints_always():
    rng = np.random.default_rng(11)
    for _ in range(200):
        a, b = rng.uniform(-50, 50, (2, 2))
        beta = float(rng.uniform(1.0, 8.0))
        r = influence_region(a, b, beta)
        assert contains(r, a)
        assert contains(r, b)


def test_contains_degenerate_pair_is_single_point():
    r = influence_region((1.5, -2.0), (1.5, -2.0), 3.0)
    assert contains(r, (1.5, -2.0))
    assert not contains(r, (1.5, -1.9999999))


def test_contains_dimension_mismatch():
    r = influence_region((0, 0), (2, 0), 1.0)
    with pytest.raises(ValueError):
        contains(r, (1, 1, 1))


def test_spherical_membership_matches_dot_sign():
    # 10^4 random triples: right-or-wider angle at t <=> t in the closed ball
    rng = np.random.default_rng(7)
    for _ in range(10_000):
        a, b, t = rng.uniform(-10, 10, (3, 2))
        dot = (a[0] - t[0]) * (b[0] - t[0]) + (a[1] - t[1]) * (b[1] - t[1])
        assert contains(influence_region(a, b, 1.0), t) == (dot <= 0.0)


@settings(max_examples=200, deadline=None)
@given(points2, points2, points2, st.sampled_from([1.0, 1.5, 2.0, 3.0, 10.0]))
def test_contains_symmetric_in_pair(a, b, q, beta):
    assert contains(influence_region(a, b, beta), q) == \
        contains(influence_region(b, a, beta), q)


@settings(max_examples=200, deadline=None)
@given(points2, points2, points2,
       st.sampled_from([(1.0, 1.5), (1.0, 2.0), (1.5, 3.0), (2.0, 10.0)]))
def test_contains_nested_in_beta(a, b, q, betas):
    lo, hi = betas
    if contains(influence_region(a, b, lo), q):
        assert contains(influence_region(a, b, hi), q)


def test_angle_classification_examples():
    assert angle_at_origin_classification((1, 0), (0, 1)) == RIGHT
    assert angle_at_origin_classification((1, 0), (-1, 1)) == OBTUSE_OR_STRAIGHT
    assert angle_at_origin_classification((1, 0), (1, 1)) == ACUTE


def test_angle_classification_rejects_zero_vector():
    with pytest.raises(ValueError):
        angle_at_origin_classification((0, 0), (1, 1))
    with pytest.raises(ValueError):
        angle_at_origin_classification((1, 1), (0, 0))
