import random

import pytest

from dynpgm.oracles import (CoverKind, SortedOracle, brute_hull,
                            brute_separable, exhaustive_separable,
                            opt_cover_size, quarter_regions_intersect)


def test_brute_hull_examples():
    up, lo = brute_hull([(0, 0), (1, 5), (2, 10)])
    assert up == [(0, 0), (2, 10)] and lo == [(0, 0), (2, 10)]
    up, lo = brute_hull([(0, 0), (1, 1), (2, 5)])
    assert up == [(0, 0), (2, 5)]
    assert lo == [(0, 0), (1, 1), (2, 5)]
    up, lo = brute_hull([(3, 7)])
    assert up == [(3, 7)] and lo == [(3, 7)]


def test_brute_hull_rejects_unsorted():
    with pytest.raises(ValueError):
        brute_hull([(1, 0), (0, 1)])


def test_brute_separable_examples():
    assert brute_separable([(0, 0), (1, 9)], 1) is not None
    assert brute_separable(list(enumerate([0, 1, 2, 1000])), 1,
                           CoverKind.VERTICAL) is None
    # in the L-infinity metric a steep line through (1,-1)-(4,999) clips the
    # corner of every box, so the same set is one-segment coverable there
    assert brute_separable(list(enumerate([0, 1, 2, 1000])), 1,
                           CoverKind.L_INFINITY) is not None
    assert brute_separable([(i, 10 * i) for i in range(6)], 1) is not None


def test_brute_separable_matches_exhaustive_tiny():
    rng = random.Random(4)
    for _ in range(600):
        n = rng.randint(1, 8)
        vals = sorted(rng.sample(range(0, 300), n))
        pts = list(enumerate(vals))
        eps = rng.choice([1, 2, 4])
        mode = rng.choice([CoverKind.VERTICAL, CoverKind.L_INFINITY])
        a = brute_separable(pts, eps, mode)
        b = exhaustive_separable(pts, eps, mode)
        assert (a is None) == (b is None), (pts, eps, mode)


def test_opt_cover_size_examples():
    assert opt_cover_size([10, 20, 30, 40], 1) == 1
    assert opt_cover_size([0, 1, 2, 1000], 1, CoverKind.VERTICAL) == 2
    # clusters of collinear points, far apart: one segment per cluster
    vals = []
    for c in range(5):
        base = c * 10 ** 9
        vals.extend(base + i for i in range(10))
    assert opt_cover_size(vals, 2) == 5
    assert opt_cover_size([], 1) == 0


def test_quarter_region_oracle_basics():
    # touching at one point counts as intersecting
    assert quarter_regions_intersect([(0, 0), (2, 2)], [(2, 2), (3, 5)])
    assert not quarter_regions_intersect([(0, 0), (2, 2)], [(0, 5), (2, 7)])
    # vertex containment without edge crossings
    assert quarter_regions_intersect([(0, 10), (1, 11)], [(5, 3), (6, 9)])


def test_sorted_oracle_semantics():
    s = SortedOracle([5, 10, 20])
    assert s.member(10) and not s.member(11)
    assert s.predecessor(12) == 10
    assert s.predecessor(5) is None
    assert s.rank(12) == 2 and s.rank(5) == 0
    assert s.range(6, 20) == [10, 20]
    assert s.range(21, 100) == []
    with pytest.raises(ValueError):
        s.range(5, 4)
    assert s.insert(7) and not s.insert(7)
    assert s.delete(7) and not s.delete(7)
    assert list(s) == [5, 10, 20]
