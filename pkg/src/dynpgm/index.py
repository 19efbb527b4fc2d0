"""Dynamic indexing structure: vertical rank cover plus an eps-paged store.

Values are grouped into pages by id = v // eps, so a page holds at most eps
values and a hash probe finds any value's page in O(1).  Pages live in an
unordered array with a hash map from id to slot and a doubly linked list in
id order, which makes range reporting output-sensitive: once the start page
is found, following successor links touches only pages that contribute.

The cover supplies the logarithmic part: predecessor queries invert the
located segment to land within eps ranks of the target, which pins the page
id down to a constant-size candidate set; a short linked-list walk settles
the exact position.  The cover and the store always hold the same value set.
"""

from __future__ import annotations

from .cover import CoverMode, CoverTree, DeleteResult, InsertResult
from .geometry import validate_value


class Page:
    """All stored values sharing one id = v // eps, in ascending order."""

    __slots__ = ("id", "values", "prev", "succ")

    def __init__(self, pid, values=()):
        self.id = pid
        self.values = list(values)
        self.prev = -1
        self.succ = -1


class PageStore:
    """Unordered page array + id hash + doubly linked page list in id order."""

    def __init__(self, eps):
        self.eps = eps
        self.pages = []          # arbitrary order
        self.by_id = {}          # page id -> index into pages
        self.head = -1           # index of the minimum-id page
        self.tail = -1
        self.touched = 0         # value cells examined (instrumentation)

    def __len__(self):
        return sum(len(p.values) for p in self.pages)

    def page_of(self, v):
        i = self.by_id.get(v // self.eps)
        return None if i is None else self.pages[i]

    def member(self, v) -> bool:
        i = self.by_id.get(v // self.eps)
        if i is None:
            return False
        vals = self.pages[i].values
        self.touched += len(vals)
        return v in vals

    # -- updates ----------------------------------------------------------

    def insert(self, v, pred):
        """Add v; pred is its strict predecessor in the set, or None."""
        pid = v // self.eps
        i = self.by_id.get(pid)
        if i is not None:
            vals = self.pages[i].values
            vals.append(v)
            j = len(vals) - 1
            while j > 0 and vals[j - 1] > vals[j]:
                vals[j - 1], vals[j] = vals[j], vals[j - 1]
                j -= 1
                self.touched += 1
            return
        page = Page(pid, [v])
        i = len(self.pages)
        self.pages.append(page)
        self.by_id[pid] = i
        if pred is None:
            # new minimum page: splice at the head
            page.succ = self.head
            if self.head >= 0:
                self.pages[self.head].prev = i
            else:
                self.tail = i
            self.head = i
            return
        j = self.by_id[pred // self.eps]
        prev_page = self.pages[j]
        page.prev = j
        page.succ = prev_page.succ
        prev_page.succ = i
        if page.succ >= 0:
            self.pages[page.succ].prev = i
        else:
            self.tail = i

    def delete(self, v):
        """Remove v; the value must be present."""
        pid = v // self.eps
        i = self.by_id[pid]
        page = self.pages[i]
        page.values.remove(v)
        self.touched += len(page.values) + 1
        if page.values:
            return
        # unlink the empty page
        if page.prev >= 0:
            self.pages[page.prev].succ = page.succ
        else:
            self.head = page.succ
        if page.succ >= 0:
            self.pages[page.succ].prev = page.prev
        else:
            self.tail = page.prev
        del self.by_id[pid]
        # swap-with-last keeps the array dense; repair indices pointing at
        # the moved page
        last = len(self.pages) - 1
        if i != last:
            moved = self.pages[last]
            self.pages[i] = moved
            self.by_id[moved.id] = i
            if moved.prev >= 0:
                self.pages[moved.prev].succ = i
            elif self.head == last:
                self.head = i
            if moved.succ >= 0:
                self.pages[moved.succ].prev = i
            elif self.tail == last:
                self.tail = i
            if self.head == last:
                self.head = i
            if self.tail == last:
                self.tail = i
        self.pages.pop()

    # -- diagnostics --------------------------------------------------------

    def check(self):
        assert len(self.by_id) == len(self.pages)
        for pid, i in self.by_id.items():
            p = self.pages[i]
            assert p.id == pid
            assert 1 <= len(p.values) <= self.eps
            assert all(v // self.eps == pid for v in p.values)
            assert all(a < b for a, b in zip(p.values, p.values[1:]))
        seen = []
        i = self.head
        prev = -1
        while i >= 0:
            p = self.pages[i]
            assert p.prev == prev
            seen.append(p.id)
            prev, i = i, p.succ
        assert prev == self.tail or (prev == -1 and self.tail == -1)
        assert seen == sorted(pid for pid in self.by_id)
        assert len(seen) == len(self.pages)


class DynamicIndex:
    """member / predecessor / rank / range over a dynamic integer set."""

    def __init__(self, eps):
        if eps < 1:
            raise ValueError("eps must be a positive integer")
        self.eps = int(eps)
        self.cover = CoverTree(self.eps, CoverMode.VERTICAL)
        self.store = PageStore(self.eps)
        self.n = 0

    def __len__(self):
        return self.n

    # -- queries ------------------------------------------------------------

    def member(self, v) -> bool:
        return self.store.member(v)

    def _seek(self, v):
        """Page index holding predecessor(v), or -1; O(eps + log segments).

        Inverts the located cover segment to an approximate rank, reads the
        cover's value estimate there to get candidate page ids, then walks
        the page list to the page whose span contains the predecessor.
        """
        cover = self.cover
        if not cover._entries:
            return -1
        idx = cover._locate_idx(v)
        if idx < 0:
            return -1
        store = self.store
        e = cover._entries[idx]
        if v > e.hi:
            # the horizontal line at v passes between two segments; the
            # predecessor is the interval's maximum value
            i = store.by_id[e.hi // self.eps]
        else:
            # Invert the segment at height v and clamp the rank into the
            # interval; the stored value at that rank is within eps ranks of
            # the predecessor, so its page pins the landing spot.  Of the
            # candidate ids b/eps and its two neighbours, the value's own
            # page is always present.
            (x1, y1), (x2, y2) = e.seg
            num = x1 * (y2 - y1) + (v - y1) * (x2 - x1)
            r = min(max(num // (y2 - y1), 0), e.size - 1)
            b = e.hull.select(r)
            i = store.by_id[b // self.eps]
        # settle: forward while the next page still starts at or below v,
        # then backward while the current page starts above v
        page = store.pages[i]
        while page.succ >= 0:
            nxt = store.pages[page.succ]
            store.touched += 1
            if nxt.values[0] >= v:
                break
            i = page.succ
            page = nxt
        while page.values[0] >= v:
            store.touched += 1
            i = page.prev
            if i < 0:
                return -1
            page = store.pages[i]
        return i

    def predecessor(self, v):
        """(page index, offset, value) of max{t in S | t < v}, or None."""
        i = self._seek(v)
        if i < 0:
            return None
        vals = self.store.pages[i].values
        j = len(vals) - 1
        while vals[j] >= v:
            j -= 1
            self.store.touched += 1
        self.store.touched += 1
        return i, j, vals[j]

    def rank_exact(self, v) -> int:
        """Number of stored values strictly below v, O(log n)."""
        return self.cover.rank_exact(v)

    def rank_approx(self, v) -> int:
        """Floor of the learned estimate; within eps of rank_exact."""
        return self.cover.evaluate_h_floor(v)

    def range(self, u, v):
        """S ∩ [u, v] ascending; touches O(output + eps) value cells."""
        if u > v:
            raise ValueError("range requires u <= v")
        store = self.store
        out = []
        i = self._seek(u)
        if i < 0:
            i = store.head
            j = 0
        else:
            page = store.pages[i]
            j = len(page.values)
            store.touched += 1
            while j > 0 and page.values[j - 1] >= u:
                j -= 1
                store.touched += 1
            if j == len(page.values):
                i = page.succ
                j = 0
        while i >= 0:
            vals = store.pages[i].values
            k = j
            while k < len(vals):
                store.touched += 1
                if vals[k] > v:
                    return out
                out.append(vals[k])
                k += 1
            i = store.pages[i].succ
            j = 0
        return out

    # -- updates ------------------------------------------------------------

    def insert(self, v) -> InsertResult:
        validate_value(v)
        if self.store.member(v):
            return InsertResult.DUPLICATE
        if v // self.eps in self.store.by_id:
            pred_value = None  # page exists; list splicing not needed
        else:
            pred = self.predecessor(v)
            pred_value = None if pred is None else pred[2]
        r = self.cover.insert(v)
        assert r == InsertResult.INSERTED
        self.store.insert(v, pred_value)
        self.n += 1
        return InsertResult.INSERTED

    def delete(self, v) -> DeleteResult:
        if not self.store.member(v):
            return DeleteResult.ABSENT
        r = self.cover.delete(v)
        assert r == DeleteResult.DELETED
        self.store.delete(v)
        self.n -= 1
        return DeleteResult.DELETED

    # -- diagnostics --------------------------------------------------------

    def check(self):
        self.store.check()
        vals = []
        i = self.store.head
        while i >= 0:
            vals.extend(self.store.pages[i].values)
            i = self.store.pages[i].succ
        assert vals == self.cover.values()
        assert len(vals) == self.n
