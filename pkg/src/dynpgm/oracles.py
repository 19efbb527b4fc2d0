"""Brute-force reference implementations used to ground the test suite.

Nothing here is shared with the production structures: hulls are rebuilt from
scratch, cover feasibility is decided by trying every candidate line, and the
query semantics live in a plain sorted array.  Slow on purpose.
"""

from __future__ import annotations

import bisect
from enum import Enum


class CoverKind(Enum):
    """Error metric of a cover: full L-infinity box or vertical-only."""

    L_INFINITY = "linf"
    VERTICAL = "vertical"


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_hull(points):
    """Upper and lower convex chains of x-sorted points, collinear interiors elided.

    Points must be strictly increasing in x.  Returns (upper, lower) as lists
    of (x, y) tuples; a single point yields one-vertex chains.
    """
    pts = [tuple(p) for p in points]
    for p, q in zip(pts, pts[1:]):
        if p[0] >= q[0]:
            raise ValueError("points must be strictly increasing in x")
    if not pts:
        return [], []
    upper = []
    lower = []
    for p in pts:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) >= 0:
            upper.pop()
        upper.append(p)
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    return upper, lower


def _shifted_sets(points, eps, mode):
    if mode == CoverKind.VERTICAL:
        low = [(x, y - eps) for x, y in points]
        high = [(x, y + eps) for x, y in points]
    else:
        low = [(x + eps, y - eps) for x, y in points]
        high = [(x - eps, y + eps) for x, y in points]
    return low, high


def _separates(line, low_pts, high_pts):
    (ax, ay), (bx, by) = line
    if bx <= ax or by <= ay:
        return False  # cover lines must have slope >= 1
    for px, py in low_pts:
        if (bx - ax) * (py - ay) - (px - ax) * (by - ay) > 0:
            return False  # a low point above the line
    for px, py in high_pts:
        if (bx - ax) * (py - ay) - (px - ax) * (by - ay) < 0:
            return False  # a high point below the line
    return True


def brute_separable(points, eps, mode=CoverKind.L_INFINITY):
    """A slope->=1 line within eps of every rank-space point, or None.

    Candidates are every edge-supporting line of the two shifted hulls plus a
    slope-1 line through each shifted vertex; one of these must work whenever
    any line works, because a separating line can always be rotated onto a
    hull edge or pinned to a vertex at the slope bound.
    """
    pts = sorted((int(x), int(y)) for x, y in points)
    if not pts:
        return ((0, 0), (1, 1))
    low, high = _shifted_sets(pts, eps, mode)
    low_upper, _ = brute_hull(low)
    _, high_lower = brute_hull(high)
    candidates = []
    for chain in (low_upper, high_lower):
        for p, q in zip(chain, chain[1:]):
            candidates.append((p, q))
        for p in chain:
            candidates.append((p, (p[0] + 1, p[1] + 1)))
    for line in candidates:
        if line[0][0] >= line[1][0]:
            continue
        if _separates(line, low, high):
            return line
    return None


def exhaustive_separable(points, eps, mode=CoverKind.L_INFINITY):
    """Oracle for the oracle: try lines through every pair of shifted points.

    Only usable for tiny n.  Also tries slope-1 lines through every point.
    """
    pts = sorted((int(x), int(y)) for x, y in points)
    low, high = _shifted_sets(pts, eps, mode)
    every = low + high
    candidates = [(p, q) for p in every for q in every if p[0] < q[0] and p[1] < q[1]]
    candidates += [(p, (p[0] + 1, p[1] + 1)) for p in every]
    for line in candidates:
        if _separates(line, low, high):
            return line
    return None


def opt_cover_size(values, eps, mode=CoverKind.L_INFINITY):
    """Minimum number of segments in any valid cover, by greedy maximal blocks.

    Greedy leftmost-maximal is optimal here: a set coverable by one segment
    stays coverable after dropping points from either end, so stretching every
    block as far right as possible never hurts.
    """
    vals = sorted(int(v) for v in values)
    n = len(vals)
    if n == 0:
        return 0
    count = 0
    start = 0
    while start < n:
        end = start + 1
        while end < n:
            block = [(i - start, vals[i]) for i in range(start, end + 1)]
            if brute_separable(block, eps, mode) is None:
                break
            end += 1
        count += 1
        start = end
    return count


def _env_side(chain, xs, ys, upper):
    """Sign tests of query points against a chain envelope, vectorized.

    For an upper-quarter chain (region below it) returns, per point, whether
    the point is at or below the envelope over the chain's x-span extended by
    the trailing horizontal halfline; points left of the first vertex are out
    of domain.  upper=False mirrors everything for a lower-quarter chain.
    """
    import numpy as np

    cx = np.array([p[0] for p in chain], dtype=np.int64)
    cy = np.array([p[1] for p in chain], dtype=np.int64)
    n = len(chain)
    ok = np.zeros(len(xs), dtype=bool)
    if upper:
        dom = xs >= cx[0]
        flat = xs >= cx[-1]
        ok |= dom & flat & (ys <= cy[-1])
    else:
        dom = xs <= cx[-1]
        flat = xs <= cx[0]
        ok |= dom & flat & (ys >= cy[0])
    mid = dom & ~flat
    if mid.any() and n >= 2:
        idx = np.searchsorted(cx, xs[mid], side="right") - 1
        idx = np.clip(idx, 0, n - 2)
        ax, ay = cx[idx], cy[idx]
        bx, by = cx[idx + 1], cy[idx + 1]
        d = (bx - ax) * (ys[mid] - ay) - (xs[mid] - ax) * (by - ay)
        sel = (d <= 0) if upper else (d >= 0)
        tmp = np.zeros(len(xs), dtype=bool)
        tmp[mid] = sel
        ok |= tmp
    return ok


def quarter_regions_intersect(upper_chain, lower_chain):
    """Closed-region overlap of an upper-quarter and a lower-quarter hull.

    Regions are the chain plus its two halflines: down/right-unbounded for the
    upper-quarter chain, up/left-unbounded for the lower-quarter one.  Overlap
    holds iff a vertex of one chain lies in the other region or two chain
    edges cross; halfline contacts reduce to the vertex tests.
    """
    import numpy as np

    ax = np.array([p[0] for p in upper_chain], dtype=np.int64)
    ay = np.array([p[1] for p in upper_chain], dtype=np.int64)
    bx = np.array([p[0] for p in lower_chain], dtype=np.int64)
    by = np.array([p[1] for p in lower_chain], dtype=np.int64)
    if _env_side(upper_chain, bx, by, upper=True).any():
        return True
    if _env_side(lower_chain, ax, ay, upper=False).any():
        return True
    if len(upper_chain) < 2 or len(lower_chain) < 2:
        return False
    # pairwise edge crossings on the m x k grid
    p1x, p1y = ax[:-1, None], ay[:-1, None]
    p2x, p2y = ax[1:, None], ay[1:, None]
    q1x, q1y = bx[None, :-1], by[None, :-1]
    q2x, q2y = bx[None, 1:], by[None, 1:]

    def orient(ox, oy, px, py, qx, qy):
        return (px - ox) * (qy - oy) - (py - oy) * (qx - ox)

    d1 = orient(q1x, q1y, q2x, q2y, p1x, p1y)
    d2 = orient(q1x, q1y, q2x, q2y, p2x, p2y)
    d3 = orient(p1x, p1y, p2x, p2y, q1x, q1y)
    d4 = orient(p1x, p1y, p2x, p2y, q2x, q2y)
    proper = ((d1 > 0) != (d2 > 0)) & (d1 != 0) & (d2 != 0) & \
             ((d3 > 0) != (d4 > 0)) & (d3 != 0) & (d4 != 0)
    if proper.any():
        return True

    def on_seg(ox, oy, px, py, qx, qy):
        return (np.minimum(ox, px) <= qx) & (qx <= np.maximum(ox, px)) & \
               (np.minimum(oy, py) <= qy) & (qy <= np.maximum(oy, py))

    touch = ((d1 == 0) & on_seg(q1x, q1y, q2x, q2y, p1x, p1y)) | \
            ((d2 == 0) & on_seg(q1x, q1y, q2x, q2y, p2x, p2y)) | \
            ((d3 == 0) & on_seg(p1x, p1y, p2x, p2y, q1x, q1y)) | \
            ((d4 == 0) & on_seg(p1x, p1y, p2x, p2y, q2x, q2y))
    return bool(touch.any())


class SortedOracle:
    """Plain sorted array with the definitional query semantics."""

    def __init__(self, values=()):
        self.vals = sorted(values)

    def insert(self, v) -> bool:
        i = bisect.bisect_left(self.vals, v)
        if i < len(self.vals) and self.vals[i] == v:
            return False
        self.vals.insert(i, v)
        return True

    def delete(self, v) -> bool:
        i = bisect.bisect_left(self.vals, v)
        if i < len(self.vals) and self.vals[i] == v:
            del self.vals[i]
            return True
        return False

    def member(self, v) -> bool:
        i = bisect.bisect_left(self.vals, v)
        return i < len(self.vals) and self.vals[i] == v

    def predecessor(self, v):
        """max{t in S | t < v}, or None."""
        i = bisect.bisect_left(self.vals, v)
        return self.vals[i - 1] if i > 0 else None

    def rank(self, v) -> int:
        """Number of stored values strictly below v."""
        return bisect.bisect_left(self.vals, v)

    def range(self, lo, hi):
        """S ∩ [lo, hi] in ascending order."""
        if lo > hi:
            raise ValueError("range requires lo <= hi")
        i = bisect.bisect_left(self.vals, lo)
        j = bisect.bisect_right(self.vals, hi)
        return self.vals[i:j]

    def __len__(self) -> int:
        return len(self.vals)

    def __iter__(self):
        return iter(self.vals)
