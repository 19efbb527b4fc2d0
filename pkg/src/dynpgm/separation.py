"""Intersection testing and separating lines for quarter-hull chains.

An upper-quarter hull is a convex chain of positive-slope edges closing the
region that extends without bound down and to the right (vertical halfline
below the first vertex, horizontal halfline right of the last).  A
lower-quarter hull mirrors this toward up-left.  The test walks balanced edge
windows of both chains, discarding half of one chain per step based on slope
ordering, crossing-side tests and coordinate dominance, and reports either an
intersection or a disjointness witness: a parallel separating edge, or the
wedge of the two boundary edges where one chain's window collapsed.  From the
wedge a second walk extracts an edge whose supporting line separates the
hulls.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import chains
from .geometry import Point, Segment, Shift, cross, slope_cmp


class Orientation(Enum):
    UPPER_QUARTER = "upper"
    LOWER_QUARTER = "lower"


class SeparationKind(Enum):
    INTERSECTING = "intersecting"
    DISJOINT_PARALLEL = "parallel"
    DISJOINT_WEDGE = "wedge"


@dataclass(frozen=True)
class Wedge:
    """Two consecutive hull edges (either may be a halfline sentinel) at apex."""

    beta: Optional[Segment]
    b: Optional[Segment]
    apex: Point
    side: Orientation  # orientation of the hull the wedge belongs to


@dataclass(frozen=True)
class SeparationResult:
    kind: SeparationKind
    witness: Optional[Segment] = None
    wedge: Optional[Wedge] = None

    @property
    def intersecting(self) -> bool:
        return self.kind == SeparationKind.INTERSECTING


# Iterations of the last intersection_test call, for complexity assertions.
LAST_STEPS = 0
# How often separating_line had to fall back to the exhaustive scan.
FALLBACK_SCANS = 0


class HullView:
    """Read-only navigable chain, possibly spliced from two stored chains.

    Vertices are exposed in ascending-x order with the lazy shift applied.
    Lower chains are stored negated (see chains module); neg=True undoes that
    on read, which also reverses the traversal order.  A piece is
    (xs, ys, start, count, dx): a slice of a stored chain plus an x offset.
    """

    __slots__ = ("pieces", "orientation", "shift", "neg", "n")

    def __init__(self, pieces, orientation, shift=Shift(), neg=False):
        self.pieces = list(pieces)
        self.orientation = orientation
        self.shift = shift
        self.neg = neg
        self.n = sum(p[3] for p in self.pieces)

    @classmethod
    def of_chain(cls, chain, dx, orientation, shift=Shift(), neg=False):
        xs, ys = chain
        return cls([(xs, ys, 0, len(xs), dx)], orientation, shift, neg)

    def vertex(self, i):
        j = self.n - 1 - i if self.neg else i
        for xs, ys, start, count, dx in self.pieces:
            if j < count:
                x = xs[start + j] + dx
                y = ys[start + j]
                if self.neg:
                    x, y = -x, -y
                return x + self.shift.dx, y + self.shift.dy
            j -= count
        raise IndexError(i)

    @property
    def n_edges(self):
        return self.n - 1

    def points(self):
        sx, sy = self.shift.dx, self.shift.dy
        out = []
        if self.neg:
            for xs, ys, start, count, dx in reversed(self.pieces):
                for j in range(start + count - 1, start - 1, -1):
                    out.append((sx - xs[j] - dx, sy - ys[j]))
        else:
            for xs, ys, start, count, dx in self.pieces:
                d = dx + sx
                for j in range(start, start + count):
                    out.append((xs[j] + d, ys[j] + sy))
        return out

    def edge(self, i):
        return self.vertex(i), self.vertex(i + 1)

    def root_edge(self):
        """Median EdgeNode of the whole chain (entry point for navigation)."""
        if self.n_edges <= 0:
            raise ValueError("chain has no edges")
        return EdgeNode(self, 0, self.n_edges - 1)


class ListChain:
    """Minimal chain interface over a materialised point list.

    Used internally where the vertices are already at hand; every access is
    O(1) and points() returns the backing list itself.
    """

    __slots__ = ("pts", "orientation", "n")

    def __init__(self, pts, orientation):
        self.pts = pts
        self.orientation = orientation
        self.n = len(pts)

    def vertex(self, i):
        return self.pts[i]

    @property
    def n_edges(self):
        return self.n - 1

    def points(self):
        return self.pts

    def edge(self, i):
        return self.pts[i], self.pts[i + 1]


class EdgeNode:
    """One chain edge together with the window of edges it is the median of."""

    __slots__ = ("view", "lo", "hi", "idx", "first", "second")

    def __init__(self, view, lo, hi):
        self.view = view
        self.lo = lo
        self.hi = hi
        self.idx = (lo + hi) // 2
        p, q = view.edge(self.idx)
        self.first = Point(p[0], p[1])
        self.second = Point(q[0], q[1])

    @property
    def left(self):
        if self.lo > self.idx - 1:
            return None
        return EdgeNode(self.view, self.lo, self.idx - 1)

    @property
    def right(self):
        if self.idx + 1 > self.hi:
            return None
        return EdgeNode(self.view, self.idx + 1, self.hi)

    @property
    def is_chain_first(self):
        return self.idx == 0

    @property
    def is_chain_last(self):
        return self.idx == self.view.n_edges - 1

    def segment(self):
        return Segment(self.first, self.second)


def _right_of_crossing(la, lb, oa, ob, p, strict):
    """Is p right of line(l) ∩ line(o)?  p must lie on line(o); slopes differ."""
    s = slope_cmp(la[0], la[1], lb[0], lb[1], oa[0], oa[1], ob[0], ob[1])
    d = cross(la[0], la[1], lb[0], lb[1], p[0], p[1])
    if s < 0:
        return d > 0 if strict else d >= 0
    return d < 0 if strict else d <= 0


def _segs_cross(a1, a2, b1, b2):
    d1 = cross(b1[0], b1[1], b2[0], b2[1], a1[0], a1[1])
    d2 = cross(b1[0], b1[1], b2[0], b2[1], a2[0], a2[1])
    d3 = cross(a1[0], a1[1], a2[0], a2[1], b1[0], b1[1])
    d4 = cross(a1[0], a1[1], a2[0], a2[1], b2[0], b2[1])
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True

    def on(a, b, p):
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and \
            min(a[1], b[1]) <= p[1] <= max(a[1], b[1])

    return (d1 == 0 and on(b1, b2, a1)) or (d2 == 0 and on(b1, b2, a2)) or \
        (d3 == 0 and on(a1, a2, b1)) or (d4 == 0 and on(a1, a2, b2))


def _dominates(p, q):
    return p[0] > q[0] and p[1] > q[1]


def _seg(p, q) -> Segment:
    return Segment(Point(p[0], p[1]), Point(q[0], q[1]))


def _locate_edge(view, x):
    """Index of the edge whose span [v_i.x, v_{i+1}.x) contains x."""
    lo, hi = 0, view.n - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if view.vertex(mid)[0] <= x:
            lo = mid
        else:
            hi = mid
    return lo


def _env_value(view, x, upper):
    """Envelope height at x as a fraction (num, den), den > 0.

    Upper chains extend flat to the right of their last vertex, lower chains
    flat to the left of their first; x must lie in the extended domain.
    """
    first = view.vertex(0)
    last = view.vertex(view.n - 1)
    if upper and x >= last[0]:
        return last[1], 1
    if not upper and x <= first[0]:
        return first[1], 1
    i = _locate_edge(view, x)
    p = view.vertex(i)
    q = view.vertex(i + 1)
    den = q[0] - p[0]
    return p[1] * den + (x - p[0]) * (q[1] - p[1]), den


def _env_right_slope(view, x, upper):
    """Envelope slope just right of x as (num, den), or None for +infinity.

    The flat extensions have slope 0; a lower chain queried at or beyond its
    last vertex reports +infinity (its region continues straight up).
    """
    first = view.vertex(0)
    last = view.vertex(view.n - 1)
    if upper:
        if x < first[0]:
            return None  # vertical wall below the first vertex
        if x >= last[0]:
            return 0, 1
    else:
        if x >= last[0]:
            return None  # vertical wall above the last vertex
        if x < first[0]:
            return 0, 1
    i = _locate_edge(view, x)
    p = view.vertex(i)
    q = view.vertex(i + 1)
    return q[1] - p[1], q[0] - p[0]


def _slope_gt(sa, sb):
    """sa > sb for fraction pairs where None means +infinity."""
    if sa is None:
        return sb is not None
    if sb is None:
        return False
    return sa[0] * sb[1] > sb[0] * sa[1]


def _envelope_max_lists(ap, bp):
    """_envelope_max over materialised point lists; fast for short chains."""
    lo = ap[0][0]
    hi = bp[-1][0]
    if lo > hi:
        return -1, None
    # candidate xs: both vertex sets clamped to [lo, hi], merged in order
    na, nb = len(ap), len(bp)
    best_num = None
    best_den = 1
    best_x = lo
    ia = ib = 0
    ka = kb = 0
    prev = None
    last_a = ap[-1]
    first_b = bp[0]
    last_b = bp[-1]
    while True:
        xa = ap[ka][0] if ka < na else None
        xb = bp[kb][0] if kb < nb else None
        if xa is None and xb is None:
            x = hi if prev != hi else None
            if x is None:
                break
        elif xb is None or (xa is not None and xa <= xb):
            x = xa
            ka += 1
        else:
            x = xb
            kb += 1
        if x is None:
            break
        if x < lo:
            x = lo
        elif x > hi:
            x = hi
        if x == prev:
            continue
        prev = x
        while ia + 1 < na and ap[ia + 1][0] <= x:
            ia += 1
        while ib + 1 < nb and bp[ib + 1][0] <= x:
            ib += 1
        if x >= last_a[0]:
            va, da = last_a[1], 1
        else:
            p = ap[ia]
            q = ap[ia + 1]
            da = q[0] - p[0]
            va = p[1] * da + (x - p[0]) * (q[1] - p[1])
        if x <= first_b[0]:
            vb, db = first_b[1], 1
        elif x >= last_b[0]:
            vb, db = last_b[1], 1
        else:
            p = bp[ib]
            q = bp[ib + 1]
            db = q[0] - p[0]
            vb = p[1] * db + (x - p[0]) * (q[1] - p[1])
        num = va * db - vb * da
        den = da * db
        if best_num is None or num * best_den > best_num * den:
            best_num, best_den, best_x = num, den, x
    sign = 0 if best_num == 0 else (1 if best_num > 0 else -1)
    return sign, best_x


def _envelope_max(a, b):
    """Maximum of env_a - env_b over the common x-domain, and its location.

    The upper-quarter region is everything below a concave envelope, the
    lower-quarter region everything above a convex one, so the closed regions
    meet iff the difference is nonnegative somewhere; they touch without
    overlapping interiors iff the maximum is exactly zero.  The difference is
    concave and piecewise linear with breakpoints at chain vertices; its
    maximum is found by a monotone bisection over each chain's vertices and a
    scan of the handful of resulting candidates.  Returns (sign, x) where
    sign is -1, 0 or +1; x is a maximising coordinate.  A sign of -1 with
    x None means the x-domains do not even meet.
    """
    if a.n + b.n <= 48:
        return _envelope_max_lists(a.points(), b.points())
    lo = a.vertex(0)[0]
    hi = b.vertex(b.n - 1)[0]
    if lo > hi:
        return -1, None

    def derivative_positive(x):
        return _slope_gt(_env_right_slope(a, x, True), _env_right_slope(b, x, False))

    candidates = [lo, hi]
    for view in (a, b):
        ilo, ihi = 0, view.n - 1
        while ilo < ihi:  # last vertex whose right derivative is positive
            mid = (ilo + ihi + 1) // 2
            if derivative_positive(view.vertex(mid)[0]):
                ilo = mid
            else:
                ihi = mid - 1
        for k in (ilo, ilo + 1):
            if 0 <= k < view.n:
                candidates.append(view.vertex(k)[0])
    best = None  # (num, den) with den > 0
    best_x = lo
    for x in candidates:
        x = min(max(x, lo), hi)
        na, da = _env_value(a, x, True)
        nb, db = _env_value(b, x, False)
        num = na * db - nb * da
        den = da * db
        if best is None or num * best[1] > best[0] * den:
            best = (num, den)
            best_x = x
    sign = 0 if best[0] == 0 else (1 if best[0] > 0 else -1)
    return sign, best_x


def _envelopes_overlap(a, b):
    return _envelope_max(a, b)[0] >= 0


def _degenerate_separator(pts_a, pts_b):
    """Separator when a chain has no edges: small candidate scan, exact.

    Candidates are all edges of both chains, slope-1 lines through every
    vertex, and positive-slope connectors between the chains; one of these
    supports a separating line whenever the regions are disjoint.
    """
    cands = []
    for pts in (pts_a, pts_b):
        for p, q in zip(pts, pts[1:]):
            cands.append((p, q))
        for p in pts:
            cands.append((p, (p[0] + 1, p[1] + 1)))
    for p in pts_a:
        for q in pts_b:
            if p[0] < q[0] and p[1] < q[1]:
                cands.append((p, q))
            if q[0] < p[0] and q[1] < p[1]:
                cands.append((q, p))
    for p in pts_a:
        for q in pts_b:
            if q[0] < p[0]:  # steep line anchored at p, B up-left
                num = p[1] - q[1]
                den = p[0] - q[0]
                s = max(1, -(-num // den))
                cands.append((p, (p[0] + 1, p[1] + s)))
    for p, q in cands:
        if p[0] >= q[0] or p[1] >= q[1]:
            continue
        ok = all(cross(p[0], p[1], q[0], q[1], v[0], v[1]) <= 0 for v in pts_a) and \
            all(cross(p[0], p[1], q[0], q[1], v[0], v[1]) >= 0 for v in pts_b)
        if ok:
            return _seg(p, q)
    return None


def intersection_test(a: HullView, b: HullView) -> SeparationResult:
    """Do the closed quarter-hull regions of a (upper) and b (lower) intersect?

    Returns the disjointness witness needed to extract a separating line: the
    parallel edge pair case carries the separating edge directly, the general
    case carries the wedge of the exhausted chain.
    """
    if a.orientation != Orientation.UPPER_QUARTER or \
            b.orientation != Orientation.LOWER_QUARTER:
        raise ValueError("intersection_test expects (upper-quarter, lower-quarter)")
    # Decide the boolean first through the envelope-difference maximisation:
    # it covers every contact, including through the halfline sentinels that
    # close both chains.  The edge walk afterwards only runs on genuinely
    # disjoint inputs, where its discards are safe, to harvest the
    # separating-line witness (parallel edge pair or wedge).
    if _envelopes_overlap(a, b):
        return SeparationResult(SeparationKind.INTERSECTING)
    return _disjoint_witness(a, b)


def _disjoint_witness(a, b) -> SeparationResult:
    """Witness for hulls already known to be (strictly) disjoint."""
    global LAST_STEPS
    LAST_STEPS = 0
    if a.n == 1 or b.n == 1:
        witness = _degenerate_separator(a.points(), b.points())
        assert witness is not None, "disjoint regions admit a separator"
        return SeparationResult(SeparationKind.DISJOINT_PARALLEL, witness=witness)

    lo_a, hi_a = 0, a.n_edges - 1
    lo_b, hi_b = 0, b.n_edges - 1
    while lo_a <= hi_a and lo_b <= hi_b:
        LAST_STEPS += 1
        ia = (lo_a + hi_a) // 2
        ib = (lo_b + hi_b) // 2
        a1, a2 = a.edge(ia)
        b1, b2 = b.edge(ib)
        s = slope_cmp(a1[0], a1[1], a2[0], a2[1], b1[0], b1[1], b2[0], b2[1])
        if s == 0:
            d = cross(a1[0], a1[1], a2[0], a2[1], b1[0], b1[1])
            if d >= 0:
                # line(b) at or above line(a): every a-vertex is weakly below
                # line(a) and every b-vertex weakly above line(b), so either
                # parallel edge is a separating witness.
                return SeparationResult(SeparationKind.DISJOINT_PARALLEL,
                                        witness=_seg(a1, a2))
            if _dominates(a1, b2):
                hi_a = ia - 1
            else:
                hi_b = ib - 1
        elif s < 0:  # slope(a-edge) < slope(b-edge)
            if _right_of_crossing(b1, b2, a1, a2, a1, strict=True):
                hi_a = ia - 1
            elif _right_of_crossing(a1, a2, b1, b2, b1, strict=True):
                hi_b = ib - 1
            elif _dominates(a1, b2):
                hi_a = ia - 1
            else:
                hi_b = ib - 1
        else:  # slope(a-edge) > slope(b-edge)
            if not _right_of_crossing(b1, b2, a1, a2, a2, strict=False):
                lo_a = ia + 1
            elif not _right_of_crossing(a1, a2, b1, b2, b2, strict=False):
                lo_b = ib + 1
            elif _dominates(a1, b2):
                lo_b = ib + 1
            else:
                lo_a = ia + 1

    if lo_b > hi_b:
        view, pos, side = b, lo_b, Orientation.LOWER_QUARTER
    else:
        view, pos, side = a, lo_a, Orientation.UPPER_QUARTER
    beta = _seg(*view.edge(pos - 1)) if pos >= 1 else None
    after = _seg(*view.edge(pos)) if pos <= view.n_edges - 1 else None
    apex_xy = view.vertex(pos)
    wedge = Wedge(beta, after, Point(apex_xy[0], apex_xy[1]), side)
    return SeparationResult(SeparationKind.DISJOINT_WEDGE, wedge=wedge)


def _line_vs_wedge(p, q, w: Wedge):
    """(hits, hit_left): does line(p,q) meet the wedge curve, and does some
    crossing lie at or left of p?  p, q are a positive-slope edge."""
    apex = (w.apex.x, w.apex.y)
    lower_side = w.side == Orientation.LOWER_QUARTER
    hits = False
    hit_left = False

    def note(hit, left):
        nonlocal hits, hit_left
        if hit:
            hits = True
            if left:
                hit_left = True

    for arm, leftward in ((w.beta, True), (w.b, False)):
        if arm is None:
            d = cross(p[0], p[1], q[0], q[1], apex[0], apex[1])
            if lower_side:
                # missing left arm: horizontal leftward halfline; missing
                # right arm: vertical upward halfline.  Both are hit iff the
                # apex is at or below the line.
                if d <= 0:
                    if leftward:
                        note(True, p[1] >= apex[1])
                    else:
                        note(True, apex[0] <= p[0])
            else:
                # upper-quarter wedge: vertical downward / horizontal rightward
                if d >= 0:
                    if leftward:
                        note(True, apex[0] <= p[0])
                    else:
                        note(True, p[1] >= apex[1])
            continue
        e1 = (arm.a.x, arm.a.y)
        e2 = (arm.b.x, arm.b.y)
        s = slope_cmp(p[0], p[1], q[0], q[1], e1[0], e1[1], e2[0], e2[1])
        if s == 0:
            if cross(e1[0], e1[1], e2[0], e2[1], p[0], p[1]) == 0:
                note(True, True)  # collinear with the arm line
            continue
        if leftward:
            on_arm = _right_of_crossing(p, q, e1, e2, apex, strict=False)
        else:
            on_arm = not _right_of_crossing(p, q, e1, e2, apex, strict=True)
        if on_arm:
            left = _right_of_crossing(e1, e2, p, q, p, strict=False)
            note(True, left)
    return hits, hit_left


def _extreme_vertex(view, sa, sb, maximize_above):
    """Vertex extremizing signed distance to a line of slope sb-sa direction.

    For an upper chain the maximizer of (y - s x) sits where the edge slope
    falls below s; for a lower chain the minimizer sits where it rises above.
    Returns the vertex tuple.
    """
    lo, hi = 0, view.n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        p, q = view.edge(mid)
        s = slope_cmp(p[0], p[1], q[0], q[1], sa[0], sa[1], sb[0], sb[1])
        if maximize_above:
            if s > 0:  # chain still rising faster than the line
                lo = mid + 1
            else:
                hi = mid
        else:
            if s < 0:
                lo = mid + 1
            else:
                hi = mid
    return view.vertex(lo)


def _weakly_separates(line: Segment, below_view, above_view) -> bool:
    la = (line.a.x, line.a.y)
    lb = (line.b.x, line.b.y)
    v = _extreme_vertex(below_view, la, lb, maximize_above=True)
    if cross(la[0], la[1], lb[0], lb[1], v[0], v[1]) > 0:
        return False
    v = _extreme_vertex(above_view, la, lb, maximize_above=False)
    return cross(la[0], la[1], lb[0], lb[1], v[0], v[1]) >= 0


def separation_find(w: Wedge, hull: HullView) -> Segment:
    """Edge-supported separating line, given the wedge from intersection_test.

    `hull` is the chain opposite the wedge's side.  Walks the edge windows; an
    edge whose line misses the wedge separates outright, otherwise the search
    follows the side of the wedge hit.  If the walk exhausts the chain, one of
    the wedge's own edges separates; both are checked directly.
    """
    lo, hi = 0, hull.n_edges - 1
    while lo <= hi:
        t = (lo + hi) // 2
        p, q = hull.edge(t)
        hits, hit_left = _line_vs_wedge(p, q, w)
        if not hits:
            return _seg(p, q)
        if hit_left:
            hi = t - 1
        else:
            lo = t + 1
    walked_is_upper = hull.orientation == Orientation.UPPER_QUARTER

    def clears_walked(cand: Segment) -> bool:
        la, lb = (cand.a.x, cand.a.y), (cand.b.x, cand.b.y)
        v = _extreme_vertex(hull, la, lb, maximize_above=walked_is_upper)
        d = cross(la[0], la[1], lb[0], lb[1], v[0], v[1])
        return d <= 0 if walked_is_upper else d >= 0

    for cand in (w.beta, w.b):
        if cand is not None and clears_walked(cand):
            return cand
    return None


def separating_line(a: HullView, b: HullView) -> Optional[Segment]:
    """A segment whose supporting line weakly separates the two hulls, or None.

    Absent exactly when the closed regions intersect (touching counts as
    intersecting).  a must be the upper-quarter view, b the lower-quarter one;
    the returned line has a weakly below it and b weakly above.
    """
    res = intersection_test(a, b)
    if res.kind == SeparationKind.INTERSECTING:
        return None
    if res.kind == SeparationKind.DISJOINT_PARALLEL:
        return res.witness
    hull = a if res.wedge.side == Orientation.LOWER_QUARTER else b
    line = separation_find(res.wedge, hull)
    if line is None:
        # The wedge had a halfline sentinel side whose line is not a valid
        # witness segment; fall back to the exhaustive candidate scan.
        global FALLBACK_SCANS
        FALLBACK_SCANS += 1
        line = _degenerate_separator(a.points(), b.points())
        assert line is not None, "disjoint hulls admit a separating line"
    return line


def _incident_edges(view, x):
    """Segments of the (up to two) chain edges whose span touches x."""
    out = []
    if view.n < 2:
        return out
    first = view.vertex(0)
    last = view.vertex(view.n - 1)
    if x < first[0] or x > last[0]:
        return out
    i = _locate_edge(view, x)
    for k in (i - 1, i, i + 1):
        if 0 <= k < view.n_edges:
            p, q = view.edge(k)
            if p[0] <= x <= q[0]:
                out.append(_seg(p, q))
    return out


def weak_separating_line(a: HullView, b: HullView) -> Optional[Segment]:
    """Separator under the weak convention: touching hulls still separate.

    Returns a segment whose supporting line has a weakly below it and b
    weakly above, if one exists; None exactly when the region interiors
    properly overlap.  Distinct from separating_line only on tangent inputs,
    where the witness is an edge at the contact point.
    """
    sign, x = _envelope_max(a, b)
    if sign > 0:
        return None
    if sign < 0:
        res = _disjoint_witness(a, b)
        line = res.witness
        if line is None:
            hull = a if res.wedge.side == Orientation.LOWER_QUARTER else b
            line = separation_find(res.wedge, hull)
        if line is None:
            global FALLBACK_SCANS
            FALLBACK_SCANS += 1
            line = _degenerate_separator(a.points(), b.points())
        assert line is not None, "strictly disjoint hulls admit a separator"
        return line
    for cand in _incident_edges(a, x) + _incident_edges(b, x):
        if _weakly_separates(cand, a, b):
            return cand
    # Tangency between a single-point chain and the other hull: the contact
    # carries no edge, so scan the candidate lines directly.
    line = _degenerate_separator(a.points(), b.points())
    assert line is not None, "tangent hulls admit a weak separator"
    return line


def view_from_points(points, orientation, shift=Shift()):
    """Static HullView over an explicit chain vertex list (test helper)."""
    pts = [tuple(p) for p in points]
    if orientation == Orientation.LOWER_QUARTER:
        chain = chains.build([(-x, -y) for x, y in reversed(pts)])
        return HullView.of_chain(chain, 0, orientation, shift, neg=True)
    return HullView.of_chain(chains.build(pts), 0, orientation, shift, neg=False)
