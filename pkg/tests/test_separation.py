import math
import random

import pytest

from dynpgm import separation as sep
from dynpgm.geometry import Point, Segment, Shift, cross
from dynpgm.oracles import brute_hull, quarter_regions_intersect
from dynpgm.separation import (EdgeNode, Orientation, SeparationKind,
                               intersection_test, separating_line,
                               separation_find, view_from_points,
                               weak_separating_line)


def upper(pts, shift=Shift()):
    return view_from_points(pts, Orientation.UPPER_QUARTER, shift)


def lower(pts, shift=Shift()):
    return view_from_points(pts, Orientation.LOWER_QUARTER, shift)


def weakly_separates(line, a_pts, b_pts):
    la, lb = (line.a.x, line.a.y), (line.b.x, line.b.y)
    return all(cross(*la, *lb, x, y) <= 0 for x, y in a_pts) and \
        all(cross(*la, *lb, x, y) >= 0 for x, y in b_pts)


def test_parallel_edges_example():
    res = intersection_test(upper([(0, 0), (2, 2)]), lower([(0, 5), (2, 7)]))
    assert res.kind == SeparationKind.DISJOINT_PARALLEL
    assert weakly_separates(res.witness, [(0, 0), (2, 2)], [(0, 5), (2, 7)])
    # slope-1 witness
    w = res.witness
    assert w.b.y - w.a.y == w.b.x - w.a.x


def test_intersecting_example():
    res = intersection_test(upper([(0, 0), (2, 4)]), lower([(1, 0), (3, 2)]))
    assert res.intersecting
    assert separating_line(upper([(0, 0), (2, 4)]), lower([(1, 0), (3, 2)])) is None


def test_disjoint_wedge_example():
    a = upper([(0, 0), (1, 1)])
    b = lower([(0, 3), (1, 10)])
    res = intersection_test(a, b)
    assert res.kind == SeparationKind.DISJOINT_WEDGE
    line = separating_line(a, b)
    assert weakly_separates(line, [(0, 0), (1, 1)], [(0, 3), (1, 10)])


def test_single_point_hulls():
    eps = 3
    a = upper([(5, 5)], Shift(0, -eps))
    b = lower([(5, 5)], Shift(0, eps))
    line = separating_line(a, b)
    assert line is not None
    assert weakly_separates(line, [(5, 2)], [(5, 8)])


def test_touching_hulls_are_intersecting():
    # closed-region convention: tangency means no (strict) separating line
    a = upper([(0, 0), (2, 2)])
    b = lower([(2, 2), (4, 7)])
    assert intersection_test(a, b).intersecting
    assert separating_line(a, b) is None
    # the weak variant accepts the touching point
    line = weak_separating_line(a, b)
    assert line is not None
    assert weakly_separates(line, [(0, 0), (2, 2)], [(2, 2), (4, 7)])


def test_edge_node_navigation():
    view = upper([(0, 0), (1, 5), (3, 8), (6, 9)])
    root = view.root_edge()
    assert isinstance(root, EdgeNode)
    assert root.idx == 1
    assert root.left.is_chain_first and root.left.left is None
    assert root.right.is_chain_last and root.right.right is None
    assert root.segment() == Segment(Point(1, 5), Point(3, 8))


def rand_monotone(rng, n, x0, xspan, y0, maxstep):
    xs = sorted(rng.sample(range(x0, x0 + xspan), n))
    y = y0
    pts = []
    for x in xs:
        y += rng.randint(1, maxstep)
        pts.append((x, y))
    return pts


def test_randomized_oracle_equivalence_and_separators():
    rng = random.Random(424)
    steps_bound_failures = 0
    for _ in range(4000):
        na, nb = rng.randint(1, 20), rng.randint(1, 20)
        step = rng.choice([1, 5, 500])
        a_pts = rand_monotone(rng, na, 0, 70, rng.randint(-300, 300), step)
        b_pts = rand_monotone(rng, nb, rng.randint(-35, 70), 70,
                              rng.randint(-350, 350), step)
        up, _ = brute_hull(a_pts)
        _, lo = brute_hull(b_pts)
        va, vb = upper(up), lower(lo)
        expect = quarter_regions_intersect(up, lo)
        res = intersection_test(va, vb)
        assert res.intersecting == expect
        if not expect:
            line = separating_line(va, vb)
            assert weakly_separates(line, up, lo)
            # the walk stays within the combined window depth
            bound = math.ceil(math.log2(max(2, va.n_edges or 1))) + \
                math.ceil(math.log2(max(2, vb.n_edges or 1))) + 1
            if sep.LAST_STEPS > bound:
                steps_bound_failures += 1
    assert steps_bound_failures == 0


def test_separation_find_contract():
    # wedge produced by a disjoint instance feeds separation_find directly
    up = [(0, 0), (3, 4), (6, 6)]
    lo = [(1, 30), (4, 33), (8, 40)]
    va, vb = upper(up), lower(lo)
    res = intersection_test(va, vb)
    assert res.kind == SeparationKind.DISJOINT_WEDGE
    hull = va if res.wedge.side == Orientation.LOWER_QUARTER else vb
    line = separation_find(res.wedge, hull)
    assert line is not None and weakly_separates(line, up, lo)


def test_slope_at_least_one_for_rank_space_chains():
    rng = random.Random(17)
    for _ in range(600):
        n = rng.randint(2, 40)
        eps = rng.choice([1, 2, 4, 8])
        vals = sorted(rng.sample(range(-10 ** 9, 10 ** 9), n))
        pts = list(enumerate(vals))
        up, lo = brute_hull(pts)
        line = weak_separating_line(upper(up, Shift(0, -eps)),
                                    lower(lo, Shift(0, eps)))
        if line is not None:
            assert line.b.y - line.a.y >= line.b.x - line.a.x


def test_orientation_validation():
    with pytest.raises(ValueError):
        intersection_test(lower([(0, 0), (1, 1)]), lower([(0, 5), (1, 6)]))
