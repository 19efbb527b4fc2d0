"""Convex-chain storage and the hull-merge bridge search.

A chain is a pair of parallel integer lists (xs, ys): the vertices of a
strictly convex upper chain in left to right order, with x coordinates local
to the owning subtree.  Lower chains reuse the same representation by storing
every point negated; the lower chain of a point set, reversed and negated, is
a strictly convex upper chain, so one bridge routine serves both.

The bridge search finds the unique pair of vertices whose connecting line
supports the hull of the union of two x-disjoint chains.  Each step classifies
the two candidate vertices against the chord between them and discards half of
one chain; the one ambiguous case is resolved by intersecting the two local
edges against the vertical separator between the chains.  Contacts collinear
with the bridge are dropped on both sides, which keeps merged chains strictly
convex.
"""

from __future__ import annotations


class Counters:
    """Global instrumentation: structural work and node allocations."""

    __slots__ = ("touches", "allocs")

    def __init__(self):
        self.touches = 0
        self.allocs = 0

    def reset(self):
        self.touches = 0
        self.allocs = 0


COUNTERS = Counters()


def bridge(ax, ay, dxa, bx, by, dxb):
    """Bridge vertex indices of two x-disjoint strictly convex upper chains.

    Chain a is (ax, ay) with dxa added to every x, chain b likewise; after the
    shifts every a-vertex must lie strictly left of every b-vertex.  Returns
    (i, j): the merged upper chain keeps a-vertices 0..i and b-vertices j...
    """
    na = len(ax)
    nb = len(bx)
    if na == 1 and nb == 1:
        return 0, 0
    lo_a, hi_a = 0, na - 1
    lo_b, hi_b = 0, nb - 1
    x0d = 2 * (bx[0] + dxb) - 1  # doubled separator just left of chain b
    steps = 0
    i = hi_a // 2
    j = hi_b // 2
    ux = ax[i] + dxa
    uy = ay[i]
    vx = bx[j] + dxb
    vy = by[j]
    while True:
        steps += 1
        cdx = vx - ux
        cdy = vy - uy
        # previous a-vertex at or above the chord: bridge lies left of i
        a_l = i > lo_a and cdx * (ay[i - 1] - uy) - (ax[i - 1] + dxa - ux) * cdy >= 0
        # next b-vertex at or above the chord: bridge lies right of j
        b_r = j < hi_b and cdx * (by[j + 1] - uy) - (bx[j + 1] + dxb - ux) * cdy >= 0
        if a_l or b_r:
            if a_l:
                hi_a = i - 1
                i = (lo_a + hi_a) // 2
                ux = ax[i] + dxa
                uy = ay[i]
            if b_r:
                lo_b = j + 1
                j = (lo_b + hi_b) // 2
                vx = bx[j] + dxb
                vy = by[j]
            continue
        a_r = i < hi_a and cdx * (ay[i + 1] - uy) - (ax[i + 1] + dxa - ux) * cdy > 0
        b_l = j > lo_b and cdx * (by[j - 1] - uy) - (bx[j - 1] + dxb - ux) * cdy > 0
        if a_r and b_l:
            # Both local edges poke above the chord; compare the crossing of
            # the two edge lines against the separator to pick the sound cut.
            eax = ax[i + 1] + dxa - ux
            eay = ay[i + 1] - uy
            px = bx[j - 1] + dxb
            py = by[j - 1]
            ebx = vx - px
            eby = vy - py
            den = eay * ebx - eby * eax
            ca = eay * ux - eax * uy
            cb = eby * px - ebx * py
            num = ca * ebx - cb * eax
            if 2 * num <= den * x0d:
                lo_a = i + 1
                i = (lo_a + hi_a) // 2
                ux = ax[i] + dxa
                uy = ay[i]
            else:
                hi_b = j - 1
                j = (lo_b + hi_b) // 2
                vx = bx[j] + dxb
                vy = by[j]
        elif a_r:
            lo_a = i + 1
            i = (lo_a + hi_a) // 2
            ux = ax[i] + dxa
            uy = ay[i]
        elif b_l:
            hi_b = j - 1
            j = (lo_b + hi_b) // 2
            vx = bx[j] + dxb
            vy = by[j]
        else:
            COUNTERS.touches += steps
            return i, j


def merge(ua, udxa, ub, udxb):
    """Merged upper chain of two x-disjoint chains, with the shifts applied.

    ua and ub are (xs, ys) pairs; returns a fresh (xs, ys).  Only the parts
    that survive the bridge are copied.
    """
    i, j = bridge(ua[0], ua[1], udxa, ub[0], ub[1], udxb)
    ax, ay = ua
    bx, by = ub
    if udxa:
        xs = [x + udxa for x in ax[: i + 1]]
    else:
        xs = ax[: i + 1]
    if udxb:
        xs = xs + [x + udxb for x in bx[j:]]
    else:
        xs = xs + bx[j:]
    return xs, ay[: i + 1] + by[j:]


def build(points):
    """Chain (xs, ys) from an ordered vertex list."""
    return [p[0] for p in points], [p[1] for p in points]


def to_points(chain, dx=0):
    xs, ys = chain
    return [(x + dx, y) for x, y in zip(xs, ys)]
