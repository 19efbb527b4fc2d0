"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s`.  The heavy scenarios are
sized exactly as stated (trial counts, tolerances, time budgets); seeds are
fixed so every run is reproducible.
"""

import math
import random
import time
from fractions import Fraction

from dynpgm import chains
from dynpgm.baseline import LogPGM
from dynpgm.bench import generate_lines, generate_unif
from dynpgm.cover import CoverMode, CoverTree, DeleteResult, InsertResult
from dynpgm.geometry import (Point, Segment, above_line, below_line, cross,
                             right_of_intersection, segments_intersect,
                             slope_less, wedge_intersects)
from dynpgm.hulls import RankHullTree
from dynpgm.index import DynamicIndex
from dynpgm.oracles import (CoverKind, SortedOracle, brute_hull,
                            brute_separable, opt_cover_size,
                            quarter_regions_intersect)
from dynpgm.separation import (Orientation, intersection_test,
                               separating_line, view_from_points)


def report(n, msg):
    print(f"\nACCEPTANCE {n} PASS: {msg}")


# -------------------------------------------------------------------------
# 1. predicate exactness: 1e6 trials per predicate vs a rational oracle
# -------------------------------------------------------------------------

def _rational_slope(s):
    return Fraction(s.b.y - s.a.y, s.b.x - s.a.x)


def _rational_line_y(s, x):
    return s.a.y + _rational_slope(s) * (x - s.a.x)


def _rational_crossing_x(l1, l2):
    m1, m2 = _rational_slope(l1), _rational_slope(l2)
    return ((l2.a.y - m2 * l2.a.x) - (l1.a.y - m1 * l1.a.x)) / (m1 - m2)


def _rational_seg_hits_halfline(beta, arm, apex, leftward):
    """Does line(beta) hit the halfline of `arm` bounded at apex?"""
    m1, m2 = _rational_slope(beta), _rational_slope(arm)
    if m1 == m2:
        return _rational_line_y(arm, beta.a.x) == Fraction(beta.a.y)
    xc = _rational_crossing_x(beta, arm)
    return xc <= apex.x if leftward else xc >= apex.x


def _rand_seg(rng, bound):
    while True:
        ax, ay = rng.randint(-bound, bound), rng.randint(-bound, bound)
        bx, by = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if ax < bx and ay < by:
            return Segment(Point(ax, ay), Point(bx, by))
        if bx < ax and by < ay:
            return Segment(Point(bx, by), Point(ax, ay))


def test_criterion_1_predicate_exactness():
    trials = 10 ** 6
    bound = 2 ** 62 - 1
    t0 = time.time()
    rng = random.Random(101)
    for _ in range(trials):
        s1, s2 = _rand_seg(rng, bound), _rand_seg(rng, bound)
        assert slope_less(s1, s2) == (_rational_slope(s1) < _rational_slope(s2))
    rng = random.Random(102)
    for _ in range(trials):
        s = _rand_seg(rng, bound)
        p = Point(rng.randint(-bound, bound), rng.randint(-bound, bound))
        y = _rational_line_y(s, p.x)
        assert above_line(s, p) == (p.y >= y)
        assert below_line(s, p) == (p.y <= y)
    rng = random.Random(103)
    done = 0
    small = 2 ** 61  # keep derived on-line points inside the coordinate range
    while done < trials:
        l1, l2 = _rand_seg(rng, small), _rand_seg(rng, small)
        if _rational_slope(l1) == _rational_slope(l2):
            continue
        t = rng.choice((-1, 0, 1, 2))
        p = Point(l2.a.x + t * (l2.b.x - l2.a.x), l2.a.y + t * (l2.b.y - l2.a.y))
        xc = _rational_crossing_x(l1, l2)
        assert right_of_intersection(l1, l2, p, True) == (p.x > xc)
        assert right_of_intersection(l1, l2, p, False) == (p.x >= xc)
        done += 1
    rng = random.Random(104)
    done = 0
    while done < trials:
        apex = Point(rng.randint(-small, small), rng.randint(-small, small))
        adx, ady = rng.randint(1, small // 2), rng.randint(1, small // 2)
        gdx, gdy = rng.randint(1, small // 2), rng.randint(1, small // 2)
        alpha = Segment(Point(apex.x - adx, apex.y - ady), apex)
        gamma = Segment(apex, Point(apex.x + gdx, apex.y + gdy))
        if not slope_less(gamma, alpha):
            continue  # the wedge must bound a convex area
        beta = _rand_seg(rng, small)
        expect = _rational_seg_hits_halfline(beta, alpha, apex, True) or \
            _rational_seg_hits_halfline(beta, gamma, apex, False)
        assert wedge_intersects(alpha, gamma, beta) == expect
        done += 1
    rng = random.Random(105)
    for _ in range(trials):
        s1, s2 = _rand_seg(rng, bound), _rand_seg(rng, bound)
        assert segments_intersect(s1, s2) == _rational_segments_intersect(s1, s2)
    dt = time.time() - t0
    assert dt <= 60, f"exactness suite took {dt:.1f}s"
    report(1, f"5 predicates x {trials} randomized trials match the rational "
              f"oracle exactly ({dt:.1f}s)")


def _rational_segments_intersect(s1, s2):
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    d1x, d1y = b.x - a.x, b.y - a.y
    d2x, d2y = d.x - c.x, d.y - c.y
    den = d1x * d2y - d1y * d2x
    if den == 0:
        if (c.x - a.x) * d1y != (c.y - a.y) * d1x:
            return False
        # collinear: closed interval overlap along x
        return max(min(a.x, b.x), min(c.x, d.x)) <= \
            min(max(a.x, b.x), max(c.x, d.x))
    t = Fraction((c.x - a.x) * d2y - (c.y - a.y) * d2x, den)
    u = Fraction((c.x - a.x) * d1y - (c.y - a.y) * d1x, den)
    return 0 <= t <= 1 and 0 <= u <= 1


# -------------------------------------------------------------------------
# 2. hull-separation oracle equivalence on 1e5 random quarter-hull pairs
# -------------------------------------------------------------------------

def test_criterion_2_separation_oracle_equivalence():
    t0 = time.time()
    rng = random.Random(202)
    trials = 10 ** 5
    for trial in range(trials):
        na, nb = rng.randint(1, 64), rng.randint(1, 64)
        step = rng.choice([1, 7, 4000])
        xa0 = rng.randint(-50, 50)
        a_pts = _monotone(rng, na, xa0, step)
        b_pts = _monotone(rng, nb, rng.randint(-50, 50), step,
                          y0=rng.randint(-200000, 200000))
        up, _ = brute_hull(a_pts)
        _, lo = brute_hull(b_pts)
        va = view_from_points(up, Orientation.UPPER_QUARTER)
        vb = view_from_points(lo, Orientation.LOWER_QUARTER)
        expect = quarter_regions_intersect(up, lo)
        got = intersection_test(va, vb)
        assert got.intersecting == expect, f"trial {trial}"
        if not expect:
            line = separating_line(va, vb)
            la, lb = (line.a.x, line.a.y), (line.b.x, line.b.y)
            assert all(cross(*la, *lb, x, y) <= 0 for x, y in up), f"trial {trial}"
            assert all(cross(*la, *lb, x, y) >= 0 for x, y in lo), f"trial {trial}"
    dt = time.time() - t0
    assert dt <= 300, f"separation suite took {dt:.1f}s"
    report(2, f"{trials} quarter-hull pairs match the region oracle; every "
              f"separating line verified ({dt:.1f}s)")


def _monotone(rng, n, x0, step, y0=0):
    xs = sorted(rng.sample(range(x0, x0 + 40 * n + 40), n))
    pts = []
    y = y0
    for x in xs:
        y += rng.randint(1, step)
        pts.append((x, y))
    return pts


# -------------------------------------------------------------------------
# 3. dynamic-hull correctness over 1e4 mixed operations
# -------------------------------------------------------------------------

def test_criterion_3_dynamic_hull_oracle():
    rng = random.Random(303)
    worlds = [lambda: rng.randint(0, 4000),
              lambda: rng.randint(-10 ** 15, 10 ** 15),
              lambda: rng.randint(1, 2300) ** 2,
              lambda: rng.randint(0, 2300) * 5 + 3]
    ops_total = 0
    for draw in worlds:
        t = RankHullTree()
        vals = set()
        for _ in range(2500):
            ops_total += 1
            if rng.random() < 0.6 or not vals:
                v = draw()
                if v not in vals:
                    t.insert(v)
                    vals.add(v)
            else:
                v = rng.choice(sorted(vals))
                t.delete(v)
                vals.discard(v)
            up, lo = brute_hull(list(enumerate(sorted(vals))))
            assert t.upper_points() == up
            assert t.lower_points() == lo
        assert len(vals) <= 10 ** 4
    report(3, f"{ops_total} mixed hull updates, chains equal the "
              f"monotone-chain oracle after every operation")


# -------------------------------------------------------------------------
# 4. cover validity, blocked pairs and 1.5x approximation after every update
# -------------------------------------------------------------------------

def test_criterion_4_cover_validity_and_approximation():
    sep_cache = {}

    def cached_separable(vals, eps, kind):
        key = (vals, eps, kind)
        hit = sep_cache.get(key)
        if hit is None:
            hit = brute_separable(list(enumerate(vals)), eps, kind) is not None
            sep_cache[key] = hit
        return hit

    def cached_opt(vals, eps, kind):
        count, start, n = 0, 0, len(vals)
        while start < n:
            end = start + 1
            while end < n and cached_separable(vals[start:end + 1], eps, kind):
                end += 1
            count += 1
            start = end
        return count

    rng = random.Random(404)
    checked = 0
    for mode, kind in ((CoverMode.VERTICAL, CoverKind.VERTICAL),
                       (CoverMode.L_INFINITY, CoverKind.L_INFINITY)):
        for eps in (1, 2, 4, 8):
            c = CoverTree(eps, mode)
            oracle = SortedOracle()
            draw = lambda: rng.choice([rng.randint(0, 250), rng.randint(0, 9000),
                                       rng.randint(1, 55) ** 2])
            for _ in range(260):
                if rng.random() < 0.7 or not len(oracle):
                    v = draw()
                    c.insert(v)
                    oracle.insert(v)
                else:
                    v = rng.choice(list(oracle))
                    c.delete(v)
                    oracle.delete(v)
                assert len(oracle) <= 300
                c.check()  # validity in the mode metric + blocked pairs
                vals = tuple(oracle)
                opt = cached_opt(vals, eps, kind)
                assert c.segment_count() <= math.ceil(1.5 * opt)
                checked += 1
    report(4, f"{checked} updates: cover valid, consecutive pairs blocked, "
              f"segment count within ceil(1.5 x opt), both modes, eps 1..8")


# -------------------------------------------------------------------------
# 5. learned-index guarantee |h(q) - rank(q)| <= eps on 1e4 pairs
# -------------------------------------------------------------------------

def test_criterion_5_learned_index_guarantee():
    rng = random.Random(505)
    pairs = 0
    for eps in (1, 4, 16, 64):
        for n, span in ((300, 10 ** 5), (1200, 10 ** 10)):
            c = CoverTree(eps, CoverMode.VERTICAL)
            oracle = SortedOracle()
            for v in rng.sample(range(span), n):
                c.insert(v)
                oracle.insert(v)
            for _ in range(1250):
                q = rng.randint(-span // 50, span + span // 50)
                h = c.evaluate_h(q)
                assert abs(h - oracle.rank(q)) <= eps
                pairs += 1
    assert pairs == 10 ** 4
    report(5, f"{pairs} random (S, q) pairs satisfy |h(q) - rank(q)| <= eps")


# -------------------------------------------------------------------------
# 6. query equivalence of both structures with the sorted oracle
# -------------------------------------------------------------------------

def test_criterion_6_query_equivalence():
    rng = random.Random(606)
    steps_done = 0
    for eps, span, steps in ((4, 50_000, 5000), (16, 10 ** 9, 5000)):
        ix = DynamicIndex(eps)
        lp = LogPGM(eps)
        oracle = SortedOracle()
        for _ in range(steps):
            roll = rng.random()
            if roll < 0.55 or not len(oracle):
                v = rng.randint(0, span)
                ok = oracle.insert(v)
                assert (ix.insert(v) == InsertResult.INSERTED) == ok
                if ok:
                    lp.insert(v)
            else:
                v = rng.choice(list(oracle))
                oracle.delete(v)
                assert ix.delete(v) == DeleteResult.DELETED
                lp.delete(v)
            q = rng.randint(-span // 10, span + span // 10)
            assert ix.member(q) == lp.member(q) == oracle.member(q)
            p = ix.predecessor(q)
            assert (p[2] if p else None) == lp.predecessor(q) == oracle.predecessor(q)
            assert ix.rank_exact(q) == lp.rank(q) == oracle.rank(q)
            u, v2 = sorted((rng.randint(0, span), rng.randint(0, span)))
            expect = oracle.range(u, v2)
            assert ix.range(u, v2) == expect
            assert lp.range(u, v2) == expect
            steps_done += 1
    assert steps_done == 10 ** 4
    report(6, f"{steps_done} mixed steps across 2 worlds: member, predecessor, "
              f"rank and range all equal the sorted oracle at every step")


# -------------------------------------------------------------------------
# 7. output-sensitive ranges under the adversarial scenario
# -------------------------------------------------------------------------

def test_criterion_7_adversarial_output_sensitivity():
    t0 = time.time()
    eps = 64
    n = 100_000
    queries = 10 ** 4
    data = [int(v) for v in generate_lines(n, 20, seed=777)]
    rng = random.Random(778)
    keep = set(rng.sample(data, 1000))
    span = max(data) - min(data)
    width = span * 200 // 1000

    ix = DynamicIndex(eps)
    for v in data:
        ix.insert(v)
    for v in data:
        if v not in keep:
            ix.delete(v)
    live = sorted(keep)
    qs = [(u := live[rng.randrange(1000)], u + width) for _ in range(queries)]

    dyn_total = 0
    for u, v in qs:
        before = ix.store.touched
        out = ix.range(u, v)
        touched = ix.store.touched - before
        assert touched <= len(out) + 2 * eps + 8
        dyn_total += touched

    lp = LogPGM(eps)
    for v in data:
        lp.insert(v)
    for v in data:
        if v not in keep:
            lp.delete(v)
    lp_total = 0
    for u, v in qs:
        before = lp.touched[0]
        lp.range(u, v)
        lp_total += lp.touched[0] - before

    dyn_mean = dyn_total / queries
    lp_mean = lp_total / queries
    dt = time.time() - t0
    assert lp_mean >= 100 * dyn_mean, (dyn_mean, lp_mean)
    assert dt <= 120, f"adversarial scenario took {dt:.1f}s"
    report(7, f"adversarial n={n}, 1000 survivors, {queries} ranges: dynamic "
              f"touch/query {dyn_mean:.0f} (all within k+2eps+8), baseline "
              f"{lp_mean:.0f} = {lp_mean / dyn_mean:.0f}x ({dt:.1f}s)")


# -------------------------------------------------------------------------
# 8. segment counts on the blocked-by-construction dataset
# -------------------------------------------------------------------------

def test_criterion_8_segment_count_scaling():
    eps = 64
    data = [int(v) for v in generate_lines(100_000, 20, seed=888)]
    ix = DynamicIndex(eps)
    for v in data:
        ix.insert(v)
    dyn_segments = ix.cover.segment_count()
    assert 20 <= dyn_segments <= 30, dyn_segments

    lp = LogPGM(eps)
    for v in data:
        lp.insert(v)
    lp_segments = sum(len(b.cover or []) + len(b.tomb_cover or [])
                      for b in lp.buckets if b is not None)
    assert lp_segments > dyn_segments, (lp_segments, dyn_segments)
    report(8, f"lines n=1e5 m=20: dynamic keeps {dyn_segments} segments in "
              f"[20, 30]; baseline spreads {lp_segments} across buckets")


# -------------------------------------------------------------------------
# 9. update cost shape: max node touches per update fits c * k^2
# -------------------------------------------------------------------------

def test_criterion_9_update_cost_shape():
    rng = random.Random(909)
    ratios = []
    for k in range(8, 15):
        n = 2 ** k
        vals = rng.sample(range(10 ** 11), n + 400)
        ix = DynamicIndex(64)
        for v in vals[:n]:
            ix.insert(v)
        worst = 0
        pool = vals[:n][:]
        for i, v in enumerate(vals[n:n + 200]):
            chains.COUNTERS.reset()
            ix.insert(v)
            worst = max(worst, chains.COUNTERS.touches)
            chains.COUNTERS.reset()
            victim = pool[rng.randrange(len(pool))]
            ix.delete(victim)
            pool.remove(victim)
            pool.append(v)
            worst = max(worst, chains.COUNTERS.touches)
        ratios.append(worst / k ** 2)
    spread = max(ratios) / min(ratios)
    assert spread < 4, (ratios, spread)
    report(9, f"max node touches per update over k=8..14 fits c*k^2; "
              f"ratio spread {spread:.2f}x < 4x")


# -------------------------------------------------------------------------
# 10. baseline amortization: merge volume over 1e5 inserts
# -------------------------------------------------------------------------

def test_criterion_10_baseline_amortization():
    m = 10 ** 5
    rng = random.Random(1010)
    lp = LogPGM(64)
    for v in rng.sample(range(10 ** 11), m):
        lp.insert(v)
    bound = 2 * m * math.log2(m)
    assert lp.merged_elements <= bound, (lp.merged_elements, bound)
    report(10, f"{m} inserts moved {lp.merged_elements} elements through "
               f"merges, within 2 m log2 m = {bound:.0f}")
