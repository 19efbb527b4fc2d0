import random

from dynpgm import chains
from dynpgm.oracles import brute_hull


def rand_ranks(rng, n, maxstep):
    y = rng.randint(-10 ** 6, 10 ** 6)
    pts = []
    for x in range(n):
        y += rng.randint(1, maxstep)
        pts.append((x, y))
    return pts


def test_bridge_trivial_pair():
    assert chains.bridge([0], [5], 0, [0], [9], 1) == (0, 0)


def test_merge_matches_brute_hull():
    rng = random.Random(7)
    for _ in range(1500):
        na = rng.randint(1, 20)
        nb = rng.randint(1, 20)
        step = rng.choice([1, 3, 10 ** 7])
        a = rand_ranks(rng, na, step)
        b = rand_ranks(rng, nb, step)
        up_a, lo_a = brute_hull(a)
        up_b, lo_b = brute_hull(b)
        merged = chains.merge(chains.build(up_a), 0, chains.build(up_b), na)
        expect, _ = brute_hull(sorted(up_a + [(x + na, y) for x, y in up_b]))
        assert chains.to_points(merged) == expect
        # lower chains ride the same code through negation
        neg_a = chains.build([(-x, -y) for x, y in reversed(lo_a)])
        neg_b = chains.build([(-x - na, -y) for x, y in reversed(lo_b)])
        m2 = chains.merge(neg_b, 0, neg_a, 0)
        got = [(-x, -y) for x, y in reversed(chains.to_points(m2))]
        _, expect_lo = brute_hull(sorted(lo_a + [(x + na, y) for x, y in lo_b]))
        assert got == expect_lo


def test_merged_chains_strictly_convex():
    rng = random.Random(9)
    for _ in range(400):
        a = rand_ranks(rng, rng.randint(1, 15), 1)  # collinear-heavy
        b = rand_ranks(rng, rng.randint(1, 15), 1)
        up_a, _ = brute_hull(a)
        up_b, _ = brute_hull(b)
        xs, ys = chains.merge(chains.build(up_a), 0, chains.build(up_b), len(a))
        for k in range(len(xs) - 2):
            turn = (xs[k + 1] - xs[k]) * (ys[k + 2] - ys[k + 1]) - \
                (xs[k + 2] - xs[k + 1]) * (ys[k + 1] - ys[k])
            assert turn < 0, "merged upper chain must turn strictly right"
