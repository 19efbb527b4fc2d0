"""Dynamic piecewise-linear rank cover with the blocked-pair guarantee.

The structure partitions the stored set into value intervals, each owning a
rank-space hull tree and one slope->=1 segment that stays within eps of every
owned point (vertically, or in L-infinity, per the mode).  The invariant that
makes the size guarantee work: no two consecutive intervals can be covered by
a single segment.  Any cover then needs at least one segment per two of ours,
so our segment count is at most 3/2 of optimal.

Updates keep the invariant locally.  An insert that leaves its interval
coverable changes nothing else: blockedness against unchanged neighbours only
grows with the union.  An insert that breaks coverability splits the interval
at the new value; a delete whose interval stays coverable re-tests the seams
(removing a point can unblock them), and one that breaks coverability splits
at the deleted value.  The split pieces are always coverable: a prefix keeps
its ranks and a suffix is a pure translate, so the old segment still fits.
Pieces and neighbours are then re-merged greedily.  Merge feasibility is
tested on a virtual splice of the two hulls' chains, so nothing is joined or
split until a merge is decided.
"""

from __future__ import annotations

import bisect
from enum import Enum
from fractions import Fraction

from . import chains
from .geometry import Point, Segment, Shift, validate_value
from .hulls import RankHullTree
from .separation import (ListChain, Orientation, _envelope_max_lists,
                         weak_separating_line)


class CoverMode(Enum):
    L_INFINITY = "linf"
    VERTICAL = "vertical"


class InsertResult(Enum):
    INSERTED = "inserted"
    DUPLICATE = "duplicate"


class DeleteResult(Enum):
    DELETED = "deleted"
    ABSENT = "absent"


def _mode_shifts(mode, eps):
    """Shifts producing the low and high comparison hulls for the mode."""
    if mode == CoverMode.VERTICAL:
        return Shift(0, -eps), Shift(0, eps)
    return Shift(eps, -eps), Shift(-eps, eps)


class CoverEntry:
    """One interval of the partition: its values, hull tree and segment."""

    __slots__ = ("hull", "seg", "lo", "hi")

    def __init__(self, hull, seg=None):
        self.hull = hull
        self.seg = seg
        self.lo = hull.min_value()
        self.hi = hull.max_value()

    @property
    def size(self):
        return len(self.hull)

    def refresh_bounds(self):
        self.lo = self.hull.min_value()
        self.hi = self.hull.max_value()


def _union_point_lists(n1, n2, shift_low, shift_high):
    """Shifted hull chains of the union of two adjacent trees, as point lists.

    One bridge per chain determines which stored vertices survive in the
    union's hull; the survivors are materialised with the rank offset and the
    mode shift applied, without mutating either tree.
    """
    s1 = n1.size
    u1, u2 = n1.u, n2.u
    i, j = chains.bridge(u1[0], u1[1], 0, u2[0], u2[1], s1)
    dxl, dyl = shift_low.dx, shift_low.dy
    ax, ay = u1
    bx, by = u2
    low_pts = [(ax[k] + dxl, ay[k] + dyl) for k in range(i + 1)]
    low_pts += [(bx[k] + s1 + dxl, by[k] + dyl) for k in range(j, len(bx))]
    l1, l2 = n1.l, n2.l
    i2, j2 = chains.bridge(l2[0], l2[1], -s1, l1[0], l1[1], 0)
    dxh, dyh = shift_high.dx, shift_high.dy
    cx, cy = l1
    ex, ey = l2
    # stored negated and reversed: un-negate while walking backwards
    high_pts = [(dxh - cx[k], dyh - cy[k]) for k in range(len(cx) - 1, j2 - 1, -1)]
    high_pts += [(s1 + dxh - ex[k], dyh - ey[k]) for k in range(i2, -1, -1)]
    return low_pts, high_pts


def _hull_point_lists(root, shift_low, shift_high):
    """Shifted upper and lower chains of one tree, as point lists."""
    ax, ay = root.u
    dxl, dyl = shift_low.dx, shift_low.dy
    low_pts = [(x + dxl, y + dyl) for x, y in zip(ax, ay)]
    bx, by = root.l
    dxh, dyh = shift_high.dx, shift_high.dy
    high_pts = [(dxh - bx[k], dyh - by[k]) for k in range(len(bx) - 1, -1, -1)]
    return low_pts, high_pts


def is_blocked(h1: RankHullTree, h2: RankHullTree, mode, eps) -> bool:
    """No single slope->=1 segment covers the union of the two trees.

    Requires max(h1) < min(h2).  Tangency between the shifted hulls counts as
    coverable (weak separation), matching the brute-force oracle.
    """
    if h1.max_value() >= h2.min_value():
        raise ValueError("is_blocked requires max(h1) < min(h2)")
    if len(h1) + len(h2) <= 2:
        return False
    sl, sh = _mode_shifts(mode, eps)
    low, high = _union_point_lists(h1._root, h2._root, sl, sh)
    return _envelope_max_lists(low, high)[0] > 0


class CoverTree:
    """Ordered partition of a dynamic integer set into eps-coverable intervals."""

    def __init__(self, eps, mode=CoverMode.VERTICAL):
        if eps < 1:
            raise ValueError("eps must be a positive integer")
        self.eps = int(eps)
        self.mode = mode
        self._shift_low, self._shift_high = _mode_shifts(mode, self.eps)
        self._entries = []  # CoverEntry list sorted by lo
        self._n = 0
        self._prefix = None  # cached rank offsets per entry

    # -- basic views --------------------------------------------------------

    def __len__(self):
        return self._n

    def segment_count(self):
        return len(self._entries)

    def segments(self):
        """Ordered (Segment, rank offset) pairs for every interval."""
        out = []
        off = 0
        for e in self._entries:
            (x1, y1), (x2, y2) = e.seg
            out.append((Segment(Point(x1, y1), Point(x2, y2)), off))
            off += e.size
        return out

    def entries(self):
        return list(self._entries)

    def values(self):
        out = []
        for e in self._entries:
            out.extend(e.hull.values())
        return out

    def contains(self, v):
        e = self._locate(v)
        return e is not None and e.hull.contains(v)

    def min_value(self):
        return self._entries[0].lo if self._entries else None

    def max_value(self):
        return self._entries[-1].hi if self._entries else None

    def dump(self):
        """Debug text: one line per interval."""
        lines = []
        off = 0
        for e in self._entries:
            (x1, y1), (x2, y2) = e.seg
            lines.append(f"{e.lo} {e.hi} {e.size} seg=({x1},{y1})-({x2},{y2}) offset={off}")
            off += e.size
        return "\n".join(lines)

    # -- internals ----------------------------------------------------------

    def _locate_idx(self, v):
        """Index of the last entry with lo <= v, or -1."""
        return bisect.bisect_right(self._entries, v, key=lambda e: e.lo) - 1

    def _locate(self, v):
        i = self._locate_idx(v)
        if i >= 0 and self._entries[i].lo <= v <= self._entries[i].hi:
            return self._entries[i]
        return None

    def _offsets(self):
        if self._prefix is None:
            acc = 0
            pref = []
            for e in self._entries:
                pref.append(acc)
                acc += e.size
            self._prefix = pref
        return self._prefix

    def _feasible_segment(self, hull):
        """A slope->=1 cover segment for the tree's points, or None."""
        if len(hull) == 1:
            v = hull.min_value()
            return ((0, v), (1, v + 1))
        low, high = _hull_point_lists(hull._root, self._shift_low, self._shift_high)
        line = weak_separating_line(ListChain(low, Orientation.UPPER_QUARTER),
                                    ListChain(high, Orientation.LOWER_QUARTER))
        if line is None:
            return None
        return ((line.a.x, line.a.y), (line.b.x, line.b.y))

    def _blocked(self, e1, e2):
        if e1.size + e2.size <= 2:
            return False
        low, high = _union_point_lists(e1.hull._root, e2.hull._root,
                                       self._shift_low, self._shift_high)
        return _envelope_max_lists(low, high)[0] > 0

    def _merge_run(self, parts):
        """Greedy left-to-right merge; returns entries with blocked seams.

        Parts whose hull changed (seg is None) get their segment recomputed;
        untouched survivors keep theirs.
        """
        out = [parts[0]]
        for nxt in parts[1:]:
            cur = out[-1]
            if not self._blocked(cur, nxt):
                out[-1] = CoverEntry(RankHullTree.join(cur.hull, nxt.hull))
            else:
                out.append(nxt)
        for e in out:
            if e.seg is None:
                e.seg = self._feasible_segment(e.hull)
                assert e.seg is not None, "finalised interval must be coverable"
        return out

    def _splice(self, i0, i1, parts):
        """Replace entries[i0:i1] by the greedy merge of parts (may be empty)."""
        self._entries[i0:i1] = self._merge_run(parts) if parts else []
        self._prefix = None

    def _with_flanks(self, parts, idx_lo, idx_hi, depth):
        """Extend parts with up to `depth` existing entries on each side.

        idx_lo..idx_hi (exclusive) is the slice the parts replace; returns the
        widened (i0, i1, parts).
        """
        i0, i1 = idx_lo, idx_hi
        for k in range(idx_lo - 1, max(idx_lo - 1 - depth, -1), -1):
            i0 = k
            parts.insert(0, self._entries[k])
        for k in range(idx_hi, min(idx_hi + depth, len(self._entries))):
            i1 = k + 1
            parts.append(self._entries[k])
        return i0, i1, parts

    # -- updates ------------------------------------------------------------

    def insert(self, s) -> InsertResult:
        validate_value(s)
        idx = self._locate_idx(s)
        ent = self._entries[idx] if idx >= 0 else None
        if ent is not None and s <= ent.hi:
            # s falls inside an existing interval
            if ent.hull.contains(s):
                return InsertResult.DUPLICATE
            ent.hull.insert(s)
            self._n += 1
            self._prefix = None
            seg = self._feasible_segment(ent.hull)
            if seg is not None:
                # Still coverable.  The seams must be re-tested anyway: the
                # ranks above s shifted, which can realign a neighbour pair
                # that used to be blocked.
                ent.seg = seg
                i0, i1, parts = self._with_flanks([ent], idx, idx + 1, 1)
                self._splice(i0, i1, parts)
                return InsertResult.INSERTED
            # No longer coverable: split at s; both outer pieces inherit
            # coverability from the old interval (prefix keeps its ranks, the
            # suffix is a translate), then re-merge the neighbourhood.
            left_t, rest = ent.hull.split(s)
            mid_t, right_t = rest.split(s + 1)
            parts = [CoverEntry(left_t), CoverEntry(mid_t), CoverEntry(right_t)]
            i0, i1, parts = self._with_flanks(parts, idx, idx + 1, 1)
            self._splice(i0, i1, parts)
            return InsertResult.INSERTED
        # s lies in a gap or beyond either end: new singleton interval
        parts = [CoverEntry(RankHullTree([s]))]
        self._n += 1
        i0, i1, parts = self._with_flanks(parts, idx + 1, idx + 1, 1)
        self._splice(i0, i1, parts)
        return InsertResult.INSERTED

    def delete(self, s) -> DeleteResult:
        idx = self._locate_idx(s)
        if idx < 0:
            return DeleteResult.ABSENT
        ent = self._entries[idx]
        if s > ent.hi or not ent.hull.contains(s):
            return DeleteResult.ABSENT
        ent.hull.delete(s)
        self._n -= 1
        if ent.hull.is_empty():
            parts = []
        else:
            seg = self._feasible_segment(ent.hull)
            if seg is not None:
                ent.refresh_bounds()
                ent.seg = seg
                parts = [ent]
            else:
                # Rank compaction past the deleted value broke coverability;
                # split there.  Both pieces stay coverable as above.
                left_t, right_t = ent.hull.split(s)
                parts = [CoverEntry(t) for t in (left_t, right_t) if not t.is_empty()]
        # One flanking entry per side suffices: a deletion inside this
        # interval leaves the outer pairs' unions, and hence their blocked
        # status, untouched, and a merge only extends a flank at its far end.
        i0, i1, parts = self._with_flanks(parts, idx, idx + 1, 1)
        self._splice(i0, i1, parts)
        return DeleteResult.DELETED

    # -- queries ------------------------------------------------------------

    def evaluate_h(self, q) -> Fraction:
        """Approximate rank of q as an exact rational, clamped to [0, n].

        Inside an interval the owning segment's line is inverted at height q
        and clamped to the interval's rank span; in the gaps the rank is known
        exactly from the partition.
        """
        if not self._entries:
            raise ValueError("empty cover")
        idx = self._locate_idx(q)
        if idx < 0:
            return Fraction(0)
        e = self._entries[idx]
        off = self._offsets()[idx]
        if q > e.hi:
            return Fraction(off + e.size)
        (x1, y1), (x2, y2) = e.seg
        local = Fraction(x1) + Fraction((q - y1) * (x2 - x1), y2 - y1)
        return min(max(Fraction(off) + local, Fraction(off)), Fraction(off + e.size))

    def evaluate_h_floor(self, q) -> int:
        h = self.evaluate_h(q)
        return h.numerator // h.denominator

    def rank_exact(self, q) -> int:
        """Number of stored values strictly below q."""
        idx = self._locate_idx(q)
        if idx < 0:
            return 0
        e = self._entries[idx]
        off = self._offsets()[idx]
        if q > e.hi:
            return off + e.size
        return off + e.hull.rank_of(q)

    # -- diagnostics --------------------------------------------------------

    def check(self):
        """Validate every structural invariant; test use only."""
        from .oracles import CoverKind, brute_separable

        kind = CoverKind.VERTICAL if self.mode == CoverMode.VERTICAL \
            else CoverKind.L_INFINITY
        total = 0
        for a, b in zip(self._entries, self._entries[1:]):
            assert a.hi < b.lo, "intervals must be disjoint and ordered"
        for e in self._entries:
            vals = e.hull.values()
            total += len(vals)
            assert vals[0] == e.lo and vals[-1] == e.hi
            (x1, y1), (x2, y2) = e.seg
            dx, dy = x2 - x1, y2 - y1
            assert dx > 0 and dy >= dx, "segment slope below one"
            for r, v in enumerate(vals):
                if self.mode == CoverMode.VERTICAL:
                    d = y1 * dx + (r - x1) * dy - v * dx
                    assert abs(d) <= self.eps * dx, "point outside vertical band"
                else:
                    # within L-inf eps iff the line passes at or above the
                    # point shifted down-right and at or below it up-left
                    low = y1 * dx + (r + self.eps - x1) * dy - (v - self.eps) * dx
                    high = y1 * dx + (r - self.eps - x1) * dy - (v + self.eps) * dx
                    assert low >= 0 >= high, "point outside L-inf band"
        assert total == self._n
        for a, b in zip(self._entries, self._entries[1:]):
            joint = list(enumerate(a.hull.values() + b.hull.values()))
            assert brute_separable(joint, self.eps, kind) is None, \
                "consecutive intervals must be blocked"
