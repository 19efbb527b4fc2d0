"""Static cover construction and the logarithmic-method baseline index.

build_static_cover is a single left-to-right pass: it maintains the interval
of feasible slopes for a line stabbing every eps-band seen so far in the
current block, closing the block the moment the interval (intersected with
slope >= 1) empties.  Consecutive blocks are therefore blocked, which gives
the 3/2-approximation on segment count.  The slope window is maintained with
two convex hulls over the band endpoints; each new point tightens the window
via a tangent found by a monotone bisection on the opposite hull.

LogPGM is the comparison structure: exponentially sized buckets, each a
sorted array plus a static cover, rebuilt by binary-counter carries.
Deletions insert tombstones that cancel against their values when a merge
brings both into one bucket; queries decompose across buckets and subtract
the tombstone side.  Range reporting consequently touches every deleted
value still lying between the query bounds, which is the weakness the
dynamic index removes.
"""

from __future__ import annotations

import bisect
from collections import Counter

from .oracles import CoverKind


def _tangent_max(hx, hy, px, py):
    """Max slope from a vertex of a lower-convex hull to p (right of it).

    The predicate "hull edge slope <= chord slope" is monotone along the
    hull, so the maximising vertex sits at its transition.
    """
    lo, hi = 0, len(hx) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        # slope(h[mid] -> h[mid+1]) <= slope(h[mid] -> p): keep moving right
        if (hy[mid + 1] - hy[mid]) * (px - hx[mid]) <= \
                (py - hy[mid]) * (hx[mid + 1] - hx[mid]):
            lo = mid + 1
        else:
            hi = mid
    return lo


def _tangent_min(hx, hy, px, py):
    """Min slope from a vertex of an upper-convex hull to p (right of it)."""
    lo, hi = 0, len(hx) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if (hy[mid + 1] - hy[mid]) * (px - hx[mid]) >= \
                (py - hy[mid]) * (hx[mid + 1] - hx[mid]):
            lo = mid + 1
        else:
            hi = mid
    return lo


class _Funnel:
    """Feasible-slope window for one growing block, in block-local ranks."""

    def __init__(self, mode, eps):
        self.mode = mode
        self.eps = eps
        # L-point of rank r: (r + sx, y - eps); U-point: (r - sx, y + eps)
        self.sx = eps if mode == CoverKind.L_INFINITY else 0
        # pairs (L_j, U_i) need U_i.x < L_j.x: admit U-points after 1 rank,
        # L-points after enough ranks that x-order is strict
        self.l_delay = 2 * self.sx + 1
        self.count = 0
        self.ys = []
        self.ux, self.uy = [], []   # lower hull of U-points (admitted)
        self.lx, self.ly = [], []   # upper hull of L-points (admitted)
        self.lo_num, self.lo_den = None, None   # max lower slope bound
        self.lo_anchor = None                   # ((xu,yu),(xl,yl)) pair
        self.hi_num, self.hi_den = None, None   # min upper slope bound
        self.c_anchor = None                    # L-point maximising y - x
        self.c_best = None

    def _admit_u(self, r):
        x = r - self.sx
        y = self.ys[r] + self.eps
        ux, uy = self.ux, self.uy
        while len(ux) >= 2 and \
                (uy[-1] - uy[-2]) * (x - ux[-1]) >= (y - uy[-1]) * (ux[-1] - ux[-2]):
            ux.pop(); uy.pop()
        ux.append(x); uy.append(y)

    def _admit_l(self, r):
        x = r + self.sx
        y = self.ys[r] - self.eps
        lx, ly = self.lx, self.ly
        while len(lx) >= 2 and \
                (ly[-1] - ly[-2]) * (x - lx[-1]) <= (y - ly[-1]) * (lx[-1] - lx[-2]):
            lx.pop(); ly.pop()
        lx.append(x); ly.append(y)

    def add(self, y) -> bool:
        """Append the next value; False when the block must close before it."""
        r = self.count
        self.ys.append(y)
        self.count += 1
        if r >= 1:
            self._admit_u(r - 1)
        if r >= self.l_delay:
            self._admit_l(r - self.l_delay)
        feasible = True
        if self.ux:
            px, py = r + self.sx, y - self.eps
            k = _tangent_max(self.ux, self.uy, px, py)
            num, den = py - self.uy[k], px - self.ux[k]
            if self.lo_num is None or num * self.lo_den > self.lo_num * den:
                self.lo_num, self.lo_den = num, den
                self.lo_anchor = ((self.ux[k], self.uy[k]), (px, py))
        if self.lx:
            px, py = r - self.sx, y + self.eps
            k = _tangent_min(self.lx, self.ly, px, py)
            num, den = py - self.ly[k], px - self.lx[k]
            if self.hi_num is None or num * self.hi_den < self.hi_num * den:
                self.hi_num, self.hi_den = num, den
        cx, cy = r + self.sx, y - self.eps
        if self.c_best is None or cy - cx > self.c_best:
            self.c_best = cy - cx
            self.c_anchor = (cx, cy)
        if self.hi_num is not None:
            if self.hi_num < self.hi_den:  # max slope below 1
                feasible = False
            elif self.lo_num is not None and \
                    self.lo_num * self.hi_den > self.hi_num * self.lo_den:
                feasible = False
        return feasible

    def witness(self):
        """A lattice segment whose line stabs every band of the block."""
        if self.lo_num is not None and self.lo_num >= self.lo_den:
            (xu, yu), (xl, yl) = self.lo_anchor
            return ((xu, yu), (xl, yl))
        cx, cy = self.c_anchor
        return ((cx, cy), (cx + 1, cy + 1))


def build_static_cover(values, eps, mode=CoverKind.VERTICAL):
    """Segments covering a sorted array within eps, with their rank offsets.

    Returns a list of (segment, start_rank, length) triples; segment follows
    block-local ranks (the block's first value has rank 0).  Greedy closing
    keeps consecutive blocks blocked, so the count is at most 3/2 of optimal.
    """
    for a, b in zip(values, values[1:]):
        if a >= b:
            raise ValueError("values must be sorted and distinct")
    out = []
    if not values:
        return out
    eps = int(eps)
    start = 0
    funnel = _Funnel(mode, eps)
    for i, y in enumerate(values):
        prev = funnel.witness() if funnel.count else None
        if funnel.add(y):
            continue
        out.append((prev, start, i - start))
        start = i
        funnel = _Funnel(mode, eps)
        ok = funnel.add(y)
        assert ok, "a single value is always coverable"
    out.append((funnel.witness(), start, len(values) - start))
    return out


class StaticBucket:
    """One full bucket: sorted values and tombstones with their covers."""

    __slots__ = ("level", "values", "tombs", "cover", "tomb_cover")

    def __init__(self, level, values, tombs, eps, mode, min_pgm_size):
        self.level = level
        self.values = values
        self.tombs = tombs
        build = lambda arr: (build_static_cover(arr, eps, mode)
                             if len(arr) >= min_pgm_size else None)
        self.cover = build(values)
        self.tomb_cover = build(tombs)

    def __len__(self):
        return len(self.values) + len(self.tombs)


def _window_rank(arr, cover, q, eps, counter):
    """bisect_left(arr, q) via the cover's +-eps window when present."""
    if not arr:
        return 0
    if cover is None:
        counter[0] += len(arr).bit_length()
        return bisect.bisect_left(arr, q)
    # locate the block whose value interval holds q
    lo_b, hi_b = 0, len(cover) - 1
    while lo_b < hi_b:
        mid = (lo_b + hi_b + 1) // 2
        if arr[cover[mid][1]] <= q:
            lo_b = mid
        else:
            hi_b = mid - 1
    (p1, p2), start, length = cover[lo_b]
    if q > arr[start + length - 1]:
        return start + length
    (x1, y1), (x2, y2) = p1, p2
    est = x1 * (y2 - y1) + (q - y1) * (x2 - x1)
    r = est // (y2 - y1)
    r = min(max(r, 0), length - 1)
    lo = max(start, start + r - eps)
    hi = min(start + length, start + r + eps + 1)
    counter[0] += 2 * eps + 1
    i = bisect.bisect_left(arr, q, lo, hi)
    # the estimate is within eps, so the window bisect is exact; guard anyway
    while i > 0 and arr[i - 1] >= q:
        i -= 1
        counter[0] += 1
    while i < len(arr) and arr[i] < q:
        i += 1
        counter[0] += 1
    return i


class LogPGM:
    """Logarithmic-method PGM baseline with tombstone deletions."""

    def __init__(self, eps, mode=CoverKind.VERTICAL, min_pgm_size=0):
        self.eps = int(eps)
        self.mode = mode
        self.min_pgm_size = min_pgm_size
        self.buckets = []            # level i: StaticBucket or None
        self.n = 0                   # live size
        self.N = 0                   # max historical size
        self.merged_elements = 0     # total elements moved by carries
        self.touched = [0]           # element cells examined by queries

    def _val_count(self, q):
        c = 0
        for b in self.buckets:
            if b is not None and b.values:
                i = _window_rank(b.values, b.cover, q, self.eps, self.touched)
                if i < len(b.values) and b.values[i] == q:
                    c += 1
        return c

    def _tomb_count(self, q):
        c = 0
        for b in self.buckets:
            if b is not None and b.tombs:
                i = _window_rank(b.tombs, b.tomb_cover, q, self.eps, self.touched)
                if i < len(b.tombs) and b.tombs[i] == q:
                    c += 1
        return c

    def member(self, q) -> bool:
        net = 0
        touched = self.touched
        eps = self.eps
        for b in self.buckets:
            if b is None:
                continue
            vals = b.values
            if vals:
                i = _window_rank(vals, b.cover, q, eps, touched)
                if i < len(vals) and vals[i] == q:
                    net += 1
            tombs = b.tombs
            if tombs:
                i = _window_rank(tombs, b.tomb_cover, q, eps, touched)
                if i < len(tombs) and tombs[i] == q:
                    net -= 1
        return net > 0

    def rank(self, q) -> int:
        """Number of live values strictly below q."""
        r = 0
        for b in self.buckets:
            if b is None:
                continue
            if b.values:
                r += _window_rank(b.values, b.cover, q, self.eps, self.touched)
            if b.tombs:
                r -= _window_rank(b.tombs, b.tomb_cover, q, self.eps, self.touched)
        return r

    def predecessor(self, q):
        """Largest live value below q, stepping past tombstoned candidates."""
        while True:
            best = None
            for b in self.buckets:
                if b is None or not b.values:
                    continue
                i = _window_rank(b.values, b.cover, q, self.eps, self.touched)
                if i > 0:
                    c = b.values[i - 1]
                    if best is None or c > best:
                        best = c
            if best is None:
                return None
            if self.member(best):
                return best
            q = best

    def range(self, u, v):
        """Live values in [u, v]; touches every dead value in between too."""
        if u > v:
            raise ValueError("range requires u <= v")
        vals = []
        tombs = []
        for b in self.buckets:
            if b is None:
                continue
            if b.values:
                i = _window_rank(b.values, b.cover, u, self.eps, self.touched)
                j = _window_rank(b.values, b.cover, v + 1, self.eps, self.touched)
                self.touched[0] += j - i
                vals.extend(b.values[i:j])
            if b.tombs:
                i = _window_rank(b.tombs, b.tomb_cover, u, self.eps, self.touched)
                j = _window_rank(b.tombs, b.tomb_cover, v + 1, self.eps, self.touched)
                self.touched[0] += j - i
                tombs.extend(b.tombs[i:j])
        if not tombs:
            return sorted(vals)
        net = Counter(vals)
        dead = Counter(tombs)
        get = dead.get
        return sorted(x for x, c in net.items() if c > get(x, 0))

    # -- updates ------------------------------------------------------------

    def _push(self, new_vals, new_tombs):
        """Binary-counter carry of one new element into the bucket array."""
        j = 0
        while j < len(self.buckets) and self.buckets[j] is not None:
            j += 1
        if j == len(self.buckets):
            self.buckets.append(None)
        vals = list(new_vals)
        tombs = list(new_tombs)
        for k in range(j):
            b = self.buckets[k]
            vals.extend(b.values)
            tombs.extend(b.tombs)
            self.buckets[k] = None
        vals.sort()
        tombs.sort()
        self.merged_elements += len(vals) + len(tombs)
        # cancel value/tombstone pairs that met in this merge
        if tombs:
            net = Counter(vals)
            net.subtract(tombs)
            vals = sorted(x for x, c in net.items() if c > 0)
            tombs = sorted(x for x, c in net.items() if c < 0)
        self.buckets[j] = StaticBucket(j, vals, tombs, self.eps, self.mode,
                                       self.min_pgm_size)

    def insert(self, v):
        if self.member(v):
            raise ValueError(f"value {v} already present")
        self._push((v,), ())
        self.n += 1
        self.N = max(self.N, self.n)

    def delete(self, v):
        if not self.member(v):
            raise ValueError(f"value {v} not present")
        self._push((), (v,))
        self.n -= 1

    # -- diagnostics --------------------------------------------------------

    def live_values(self):
        vals = []
        tombs = []
        for b in self.buckets:
            if b is not None:
                vals.extend(b.values)
                tombs.extend(b.tombs)
        net = Counter(vals)
        net.subtract(tombs)
        return sorted(x for x, c in net.items() if c > 0)

    def check(self):
        from .oracles import brute_separable

        for lvl, b in enumerate(self.buckets):
            if b is None:
                continue
            assert b.level == lvl
            for arr, cover in ((b.values, b.cover), (b.tombs, b.tomb_cover)):
                assert all(x < y for x, y in zip(arr, arr[1:]))
                if cover is None or not arr:
                    continue
                spans = [(s, s + ln) for _, s, ln in cover]
                assert spans[0][0] == 0 and spans[-1][1] == len(arr)
                assert all(x[1] == y[0] for x, y in zip(spans, spans[1:]))
                for (p1, p2), s, ln in cover:
                    (x1, y1), (x2, y2) = p1, p2
                    dx, dy = x2 - x1, y2 - y1
                    assert dx > 0 and dy >= dx
                    for r in range(ln):
                        vv = arr[s + r]
                        if self.mode == CoverKind.VERTICAL:
                            d = y1 * dx + (r - x1) * dy - vv * dx
                            assert abs(d) <= self.eps * dx
                        else:
                            lo = y1 * dx + (r + self.eps - x1) * dy - (vv - self.eps) * dx
                            hi = y1 * dx + (r - self.eps - x1) * dy - (vv + self.eps) * dx
                            assert lo >= 0 >= hi
                for (s1, e1), _ in zip(spans, spans[1:]):
                    blocked = list(enumerate(arr[s1:e1 + 1]))  # block + successor
                    assert brute_separable(blocked, self.eps, self.mode) is None, \
                        "consecutive cover blocks must be blocked"
