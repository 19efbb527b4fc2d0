"""Rank-based dynamic convex hull over a contiguous run of distinct values.

The tree is a leaf-oriented AVL over the values.  Point i of the represented
set lives at rank-space position (i, value_i), where i is the value's 0-based
position inside this tree, so x coordinates are never stored globally and
cannot go stale when ranks shift.  Every node caches the upper and lower
convex chains of its own subtree in subtree-local coordinates; a parent's
chains are rebuilt from its children's by one bridge search per chain plus
list splicing.  Children keep their chains, so nothing has to be handed back
on the way down a search path: updates simply rebuild the chains of the nodes
along one root-to-leaf path, and split and join rebuild the nodes whose
subtrees change.

Lower chains are stored negated (both coordinates), which turns them into
upper chains of the reflected point set and lets one merge routine serve both
chains; views un-negate on read.
"""

from __future__ import annotations

from . import chains
from .chains import COUNTERS
from .geometry import Shift, validate_value
from .separation import HullView, Orientation


class DuplicateValueError(ValueError):
    """Raised when inserting a value that is already present."""


class AbsentValueError(ValueError):
    """Raised when deleting a value that is not present."""


class _Node:
    __slots__ = ("left", "right", "size", "height", "key", "val", "u", "l")

    def __init__(self):
        COUNTERS.allocs += 1


def _leaf(v):
    n = _Node()
    n.left = n.right = None
    n.size = 1
    n.height = 1
    n.key = v
    n.val = v
    n.u = ([0], [v])
    n.l = ([0], [-v])
    return n


def _remerge(v, a, b):
    """Make v the parent of subtrees a and b, rebuilding v's chains."""
    COUNTERS.touches += 1
    s_left = a.size
    v.left = a
    v.right = b
    v.size = s_left + b.size
    ha, hb = a.height, b.height
    v.height = 1 + (ha if ha > hb else hb)
    v.key = a.u[1][-1]  # max value in the left subtree
    v.val = None
    v.u = chains.merge(a.u, 0, b.u, s_left)
    # negated space: the right subtree's points come first, shifted left
    v.l = chains.merge(b.l, -s_left, a.l, 0)
    return v


def _balance(v):
    """Rebalance v (children may differ in height by up to two)."""
    a, b = v.left, v.right
    d = a.height - b.height
    if -1 <= d <= 1:
        return _remerge(v, a, b)
    if d == 2:
        al, ar = a.left, a.right
        if ar.height > al.height:
            return _remerge(ar, _remerge(a, al, ar.left), _remerge(v, ar.right, b))
        return _remerge(a, al, _remerge(v, ar, b))
    if d == -2:
        bl, br = b.left, b.right
        if bl.height > br.height:
            return _remerge(bl, _remerge(v, a, bl.left), _remerge(b, bl.right, br))
        return _remerge(b, _remerge(v, a, bl), br)
    raise AssertionError(f"imbalance {d} out of range")


def _skip_balance(n):
    """Bookkeeping-only update when the children's chains are unchanged.

    Valid only when the left child kept its size, so the right part's rank
    shift, and with it this node's chains, are untouched.  Falls back to a
    full rebuild when the height change forces a rotation.
    """
    a, b = n.left, n.right
    if abs(a.height - b.height) > 1:
        return _balance(n)
    COUNTERS.touches += 1
    n.size = a.size + b.size
    ha, hb = a.height, b.height
    n.height = 1 + (ha if ha > hb else hb)
    return n


def _insert(n, v):
    if n.left is None:
        if v < n.val:
            return _remerge(_Node(), _leaf(v), n)
        return _remerge(_Node(), n, _leaf(v))
    if v <= n.key:
        # the right part's rank shift grows; chains must be rebuilt
        n.left = _insert(n.left, v)
        return _balance(n)
    r = n.right
    ru, rl = r.u, r.l
    c = _insert(r, v)
    n.right = c
    if c is r:
        if c.u is ru and c.l is rl:
            return _skip_balance(n)
        if c.u == ru and c.l == rl:
            # value-stable across the rebuild boundary: reinstall the old
            # lists so ancestors can skip by identity
            c.u, c.l = ru, rl
            return _skip_balance(n)
    return _balance(n)


def _delete(n, v):
    """Remove leaf v; returns the new subtree (None when it was the leaf)."""
    if n.left is None:
        return None
    if v <= n.key:
        child = _delete(n.left, v)
        if child is None:
            return n.right
        n.left = child
        return _balance(n)
    r = n.right
    ru, rl = r.u, r.l
    child = _delete(r, v)
    if child is None:
        return n.left
    n.right = child
    if child is r:
        if child.u is ru and child.l is rl:
            return _skip_balance(n)
        if child.u == ru and child.l == rl:
            child.u, child.l = ru, rl
            return _skip_balance(n)
    return _balance(n)


def _join(a, b):
    """Concatenate two subtrees; every value in a precedes every value in b."""
    if a is None:
        return b
    if b is None:
        return a
    if abs(a.height - b.height) <= 1:
        return _remerge(_Node(), a, b)
    if a.height > b.height:
        a.right = _join(a.right, b)
        return _balance(a)
    b.left = _join(a, b.left)
    return _balance(b)


def _split(n, v):
    """Subtrees holding values < v and values >= v."""
    if n.left is None:
        if n.val < v:
            return n, None
        return None, n
    if v <= n.key:
        a, b = _split(n.left, v)
        return a, _join(b, n.right)
    a, b = _split(n.right, v)
    return _join(n.left, a), b


def _build(values, lo, hi):
    if lo == hi:
        return _leaf(values[lo])
    mid = (lo + hi) // 2
    return _remerge(_Node(), _build(values, lo, mid), _build(values, mid + 1, hi))


class RankHullTree:
    """Ordered set of distinct integers exposing exact rank-space hull chains."""

    __slots__ = ("_root",)

    def __init__(self, values=()):
        vals = sorted(values)
        for a, b in zip(vals, vals[1:]):
            if a == b:
                raise DuplicateValueError(f"duplicate value {a}")
        for x in vals:
            validate_value(x)
        self._root = _build(vals, 0, len(vals) - 1) if vals else None

    @classmethod
    def _from_root(cls, root):
        t = cls.__new__(cls)
        t._root = root
        return t

    # -- queries -----------------------------------------------------------

    def __len__(self):
        return self._root.size if self._root is not None else 0

    size = __len__

    def is_empty(self):
        return self._root is None

    def min_value(self):
        if self._root is None:
            raise ValueError("empty tree has no minimum")
        return self._root.u[1][0]

    def max_value(self):
        if self._root is None:
            raise ValueError("empty tree has no maximum")
        return self._root.u[1][-1]

    def contains(self, v) -> bool:
        n = self._root
        if n is None:
            return False
        while n.left is not None:
            n = n.left if v <= n.key else n.right
        return n.val == v

    def rank_of(self, v) -> int:
        """Number of stored values strictly below v."""
        n = self._root
        if n is None:
            return 0
        acc = 0
        while n.left is not None:
            if v <= n.key:
                n = n.left
            else:
                acc += n.left.size
                n = n.right
        return acc + (1 if n.val < v else 0)

    def select(self, k):
        """k-th smallest value, 0-based."""
        n = self._root
        if n is None or not 0 <= k < n.size:
            raise IndexError(k)
        while n.left is not None:
            ls = n.left.size
            if k < ls:
                n = n.left
            else:
                k -= ls
                n = n.right
        return n.val

    def values(self):
        out = []
        stack = []
        n = self._root
        while n is not None or stack:
            while n is not None:
                stack.append(n)
                n = n.left
            n = stack.pop()
            if n.left is None:
                out.append(n.val)
            n = n.right
        return out

    def upper_points(self):
        """Vertices of the upper chain as (local rank, value) pairs."""
        if self._root is None:
            return []
        return chains.to_points(self._root.u)

    def lower_points(self):
        if self._root is None:
            return []
        xs, ys = self._root.l
        return [(-x, -y) for x, y in zip(reversed(xs), reversed(ys))]

    def get_hull(self, chain="upper", shift=Shift()):
        """Navigable view of one chain under a lazy shift, O(1)."""
        if self._root is None:
            raise ValueError("empty tree has no hull")
        if chain == "upper":
            return HullView.of_chain(self._root.u, 0,
                                     Orientation.UPPER_QUARTER, shift, neg=False)
        if chain == "lower":
            return HullView.of_chain(self._root.l, 0,
                                     Orientation.LOWER_QUARTER, shift, neg=True)
        raise ValueError(f"unknown chain {chain!r}")

    # -- updates -----------------------------------------------------------

    def insert(self, v):
        validate_value(v)
        if self.contains(v):
            raise DuplicateValueError(f"value {v} already present")
        if self._root is None:
            self._root = _leaf(v)
        else:
            self._root = _insert(self._root, v)
        return self

    def delete(self, v):
        if not self.contains(v):
            raise AbsentValueError(f"value {v} not present")
        self._root = _delete(self._root, v)
        return self

    def split(self, v):
        """Trees for values < v and values >= v; consumes this tree."""
        root, self._root = self._root, None
        if root is None:
            return RankHullTree._from_root(None), RankHullTree._from_root(None)
        a, b = _split(root, v)
        return RankHullTree._from_root(a), RankHullTree._from_root(b)

    @staticmethod
    def join(t1, t2):
        """Concatenation; requires max(t1) < min(t2).  Consumes both trees."""
        r1, r2 = t1._root, t2._root
        if r1 is not None and r2 is not None and r1.u[1][-1] >= r2.u[1][0]:
            raise ValueError("join requires max(t1) < min(t2)")
        t1._root = t2._root = None
        return RankHullTree._from_root(_join(r1, r2))

    # -- diagnostics -------------------------------------------------------

    def check(self):
        """Full structural validation; test use only."""
        from .oracles import brute_hull

        if self._root is None:
            return

        def rec(n):
            if n.left is None:
                assert n.size == 1 and n.height == 1 and n.key == n.val
                return [n.val]
            lv = rec(n.left)
            rv = rec(n.right)
            assert abs(n.left.height - n.right.height) <= 1, "AVL imbalance"
            assert n.height == 1 + max(n.left.height, n.right.height)
            assert n.size == len(lv) + len(rv)
            assert n.key == lv[-1]
            assert lv[-1] < rv[0]
            up, lo = brute_hull(list(enumerate(lv + rv)))
            assert chains.to_points(n.u) == up, "upper chain mismatch"
            neg = [(-x, -y) for x, y in reversed(lo)]
            assert chains.to_points(n.l) == neg, "lower chain mismatch"
            return lv + rv

        rec(self._root)
