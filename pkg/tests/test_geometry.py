import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from diskstab.errors import DegenerateIntersection, IdenticalCircles, NoLens, NotHelly
from diskstab.geometry import (
    D_INF,
    Disk,
    Halfplane,
    Point,
    candidate_points,
    circle_intersection_points,
    circle_line_points,
    closest_point,
    contains,
    distance_to,
    extreme_point,
    intersection_witness,
    lens_angle,
    moved,
    order_key,
    signed_distance,
)

S3 = math.sqrt(3)

coord = st.floats(-50, 50, allow_nan=False)
radius = st.floats(0.05, 20, allow_nan=False)
disks = st.builds(Disk, coord, coord, radius)


def close(p, q, tol=1e-12):
    return abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol


# -- types ---------------------------------------------------------------------

def test_disk_rejects_bad_radius():
    with pytest.raises(ValueError):
        Disk(0, 0, 0)
    with pytest.raises(ValueError):
        Disk(0, 0, -1)
    with pytest.raises(ValueError):
        Disk(float("nan"), 0, 1)


def test_halfplane_needs_unit_normal():
    with pytest.raises(ValueError):
        Halfplane(1, 1, 0)
    Halfplane(0.6, 0.8, 3)


def test_order_key_puts_halfplanes_after_disks_and_dinf_last():
    objs = [Halfplane(0, 1, 0, 5), Disk(0, 0, 100, 1), Disk(0, 0, 1, 2), D_INF, Disk(0, 0, 1, 0)]
    ordered = sorted(objs, key=order_key)
    assert [g.id for g in ordered] == [0, 2, 1, 5, -1]


# -- circle intersections ------------------------------------------------------

def test_disjoint_circles_have_no_points():
    assert circle_intersection_points(Disk(0, 0, 1), Disk(3, 0, 1)) == []


def test_external_tangency_gives_one_point():
    pts = circle_intersection_points(Disk(0, 0, 1), Disk(2, 0, 1))
    assert len(pts) == 1 and close(pts[0], (1, 0))


def test_two_points_sorted():
    pts = circle_intersection_points(Disk(0, 0, 1), Disk(S3, 0, 1))
    assert len(pts) == 2
    assert close(pts[0], (S3 / 2, -0.5)) and close(pts[1], (S3 / 2, 0.5))


def test_identical_circles_raise():
    with pytest.raises(IdenticalCircles):
        circle_intersection_points(Disk(1, 2, 3), Disk(1, 2, 3))


def test_lens_vertices_of_the_four_point_frame():
    # the unit-radius frame with centers at -sqrt3/2 and the circles 2r, r
    c1 = Disk(-S3 / 2, 0, 2)
    r1, r2 = circle_intersection_points(c1, Disk(0, 1, 1))
    assert close(r1, ((5 * S3 - 2 * math.sqrt(87)) / 28, (38 + 3 * math.sqrt(29)) / 28))
    assert close(r2, ((5 * S3 + 2 * math.sqrt(87)) / 28, (38 - 3 * math.sqrt(29)) / 28))


@given(disks, disks)
def test_intersection_points_lie_on_both_circles(a, b):
    d = math.hypot(a.cx - b.cx, a.cy - b.cy)
    if d < 1e-6 or d > a.r + b.r or d < abs(a.r - b.r):
        return
    for p in circle_intersection_points(a, b):
        for g in (a, b):
            assert abs(math.hypot(p.x - g.cx, p.y - g.cy) - g.r) <= 1e-9 * max(1.0, g.r, d)


def test_circle_line_points():
    pts = circle_line_points(Disk(0, 0, 1), Halfplane(0, 1, 0.5))
    assert len(pts) == 2
    for p in pts:
        assert abs(p.y - 0.5) < 1e-12 and abs(math.hypot(*p) - 1) < 1e-12


# -- lens angle ----------------------------------------------------------------

@pytest.mark.parametrize("r1,r2,d,expected", [
    (1, 1, 2, math.pi),
    (1, 1, S3, 2 * math.pi / 3),
    (2, 1, math.sqrt(5), math.pi / 2),
])
def test_lens_angle_examples(r1, r2, d, expected):
    assert lens_angle(Disk(0, 0, r1), Disk(d, 0, r2)) == pytest.approx(expected, abs=1e-12)


def test_lens_angle_needs_crossing_boundaries():
    with pytest.raises(NoLens):
        lens_angle(Disk(0, 0, 1), Disk(3, 0, 1))
    with pytest.raises(NoLens):
        lens_angle(Disk(0, 0, 5), Disk(0.5, 0, 1))


@given(disks, disks)
def test_lens_angle_is_symmetric(a, b):
    try:
        ab = lens_angle(a, b)
    except NoLens:
        return
    assert ab == lens_angle(b, a)
    assert 0 <= ab <= math.pi


# -- membership and distances ----------------------------------------------------

def test_contains_examples():
    assert contains(Disk(0, 0, 1), Point(0, 1))
    assert not contains(Halfplane(0, 1, 0), Point(5, 0.1), 1e-9)
    assert not contains(Disk(S3, 0, 1), Point(0.98, 0.78))


def test_distance_examples():
    assert distance_to(Disk(0, 5, 1), (0, 0)) == pytest.approx(4)
    assert distance_to(Halfplane(0, 1, 0), (3, 2)) == pytest.approx(2)
    assert distance_to(Disk(0, 5, 1), (3, 1)) == pytest.approx(4)


@given(disks, coord, coord)
def test_distance_zero_iff_contained(g, x, y):
    assert (distance_to(g, (x, y)) == 0) == contains(g, (x, y), 0.0)


@given(st.floats(0, 2 * math.pi), coord, coord, st.floats(-1e3, 1e3))
def test_halfplane_distance_zero_iff_contained(ang, x, y, off):
    h = Halfplane(math.cos(ang), math.sin(ang), off)
    assert (distance_to(h, (x, y)) == 0) == contains(h, (x, y), 0.0)


# -- Helly oracle --------------------------------------------------------------

def _triangle(side, r):
    return [Disk(side * math.cos(a), side * math.sin(a), r, i)
            for i, a in enumerate((math.pi / 2, math.pi / 2 + 2 * math.pi / 3, math.pi / 2 + 4 * math.pi / 3))]


def _equilateral(side, r=1.0):
    # vertices at distance side/sqrt3 from the origin
    return _triangle(side / S3, r)


def test_witness_small_triangle():
    fam = _equilateral(1.0)
    p = intersection_witness(fam)
    assert p is not None and all(contains(g, p) for g in fam)


def test_witness_large_triangle_is_none():
    assert intersection_witness(_equilateral(1.9)) is None


def test_witness_single_disk():
    p = intersection_witness([Disk(3, 4, 1)])
    assert contains(Disk(3, 4, 1), p)


def test_witness_single_halfplane_uses_deep_point():
    h = Halfplane(0, 1, 2)
    p = intersection_witness([h])
    assert signed_distance(h, p) < -1e5


def test_witness_reports_a_lone_tangency_it_cannot_confirm():
    # disks 0 and 1 touch at the origin, which disk 2 contains
    fam = [Disk(-1, 0, 1, 0), Disk(1, 0, 1, 1), Disk(0, -1, 1, 2)]
    p = intersection_witness(fam)
    assert p is not None and close(p, (0, 0), 1e-9)
    # three unit disks whose nearest candidate misses the third disk by 3e-8
    near = _triangle(1 + 1e-8, 1.0)
    with pytest.raises(DegenerateIntersection):
        intersection_witness(near)


@given(st.integers(0, 2**32 - 1), st.integers(2, 6))
def test_witness_agrees_with_grid_sampling(seed, n):
    rng = np.random.Generator(np.random.Philox(seed))
    x = rng.uniform(0, 4, n)
    y = rng.uniform(0, 4, n)
    r = rng.uniform(0.8, 3, n)
    fam = [Disk(float(a), float(b), float(c), i) for i, (a, b, c) in enumerate(zip(x, y, r))]
    try:
        w = intersection_witness(fam)
    except DegenerateIntersection:
        return
    gx = np.linspace((x - r).min(), (x + r).max(), 1000)
    gy = np.linspace((y - r).min(), (y + r).max(), 1000)
    X, Y = np.meshgrid(gx, gy)
    inside = np.ones_like(X, dtype=bool)
    for g in fam:
        inside &= (X - g.cx) ** 2 + (Y - g.cy) ** 2 <= g.r ** 2
    if inside.any():
        assert w is not None
    if w is not None:
        assert all(contains(g, w) for g in fam)


def test_candidate_points_contain_centers():
    fam = [Disk(0, 0, 1, 0), Disk(1, 0, 1, 1)]
    pts = candidate_points(fam)
    assert Point(0, 0) in pts and Point(1, 0) in pts


# -- extreme points ------------------------------------------------------------

def test_extreme_point_single_disk_lowest_point():
    assert close(extreme_point([Disk(0, 5, 1)], D_INF), (0, 4))


def test_extreme_point_lens_vertex():
    v = extreme_point([Disk(0, 5, 1, 0), Disk(1.8, 5, 1, 1)], D_INF)
    assert close(v, (0.9, 5 - math.sqrt(0.19)), 1e-12)


def test_extreme_point_toward_a_disk_destroyer():
    v = extreme_point([Disk(0, 5, 1, 0), Disk(0.5, 5, 1, 1)], Disk(0.25, -10, 1, 2))
    assert close(v, (0.25, 5 - math.sqrt(1 - 0.0625)), 1e-9)


def test_extreme_point_requires_helly_pair():
    with pytest.raises(NotHelly):
        extreme_point([Disk(0, 5, 1, 0), Disk(5, 5, 1, 1)], D_INF)


def test_closest_point_toward_disk():
    p = closest_point(Disk(0, 0, 2), Disk(10, 0, 1))
    assert close(p, (2, 0))


@given(st.floats(0, 2 * math.pi), coord, coord)
def test_rigid_motion_preserves_lens_angle(ang, dx, dy):
    a, b = Disk(0, 0, 1.3, 0), Disk(1.9, 0.4, 1.1, 1)
    assert lens_angle(moved(a, ang, dx, dy), moved(b, ang, dx, dy)) == pytest.approx(lens_angle(a, b), abs=1e-9)
