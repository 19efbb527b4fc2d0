"""Exact integer predicates over rank-space points and positive-slope segments.

All decisions in this library reduce to sign tests on integer expressions:
slope comparisons and orientation determinants. Python integers are exact at
any width, so every predicate here is exact by construction; there is no
floating-point path and no fallback kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

# Structures that ingest user data validate coordinates against this bound so
# that a value, its rank and any epsilon shift all stay well inside 64 bits.
# The raw predicates themselves accept arbitrary integers.
COORD_LIMIT = 1 << 62


@dataclass(frozen=True, slots=True)
class Point:
    """Lattice point in rank space: x is a rank, y is a stored value."""

    x: int
    y: int

    def shifted(self, dx: int, dy: int) -> "Point":
        return Point(self.x + dx, self.y + dy)


@dataclass(frozen=True, slots=True)
class Segment:
    """Directed segment with a.x < b.x and a.y < b.y (strictly positive slope)."""

    a: Point
    b: Point

    def __post_init__(self) -> None:
        if not (self.a.x < self.b.x and self.a.y < self.b.y):
            raise ValueError(f"segment must run up and to the right: {self.a} -> {self.b}")

    def shifted(self, dx: int, dy: int) -> "Segment":
        return Segment(self.a.shifted(dx, dy), self.b.shifted(dx, dy))


@dataclass(frozen=True, slots=True)
class Shift:
    """Lazy translation. Views apply it on read; stored points never move."""

    dx: int = 0
    dy: int = 0

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return x + self.dx, y + self.dy


def validate_value(v: int) -> int:
    """Reject values whose magnitude leaves the supported coordinate range."""
    if not isinstance(v, int) or isinstance(v, bool):
        raise TypeError(f"expected int, got {type(v).__name__}")
    if not -COORD_LIMIT < v < COORD_LIMIT:
        raise ValueError(f"value {v} outside supported range (|v| < 2^62)")
    return v


# ---------------------------------------------------------------------------
# integer kernels (no allocation, plain ints)
# ---------------------------------------------------------------------------

def cross(ax: int, ay: int, bx: int, by: int, cx: int, cy: int) -> int:
    """Orientation determinant of (a, b, c): >0 above line a->b, <0 below."""
    return (bx - ax) * (cy - by) - (cx - bx) * (by - ay)


def slope_cmp(ax: int, ay: int, bx: int, by: int, cx: int, cy: int, dx: int, dy: int) -> int:
    """Sign of slope(ab) - slope(cd); requires b.x > a.x and d.x > c.x."""
    lhs = (by - ay) * (dx - cx)
    rhs = (dy - cy) * (bx - ax)
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


# ---------------------------------------------------------------------------
# public predicates
# ---------------------------------------------------------------------------

def slope_less(ab: Segment, cd: Segment) -> bool:
    """True iff slope(ab) < slope(cd), compared exactly by cross-multiplication."""
    return slope_cmp(ab.a.x, ab.a.y, ab.b.x, ab.b.y, cd.a.x, cd.a.y, cd.b.x, cd.b.y) < 0


def above_line(ab: Segment, c: Point) -> bool:
    """True iff c lies on or above the supporting line of ab."""
    return cross(ab.a.x, ab.a.y, ab.b.x, ab.b.y, c.x, c.y) >= 0


def below_line(ab: Segment, c: Point) -> bool:
    """True iff c lies on or below the supporting line of ab."""
    return cross(ab.a.x, ab.a.y, ab.b.x, ab.b.y, c.x, c.y) <= 0


def strictly_above(ab: Segment, c: Point) -> bool:
    return cross(ab.a.x, ab.a.y, ab.b.x, ab.b.y, c.x, c.y) > 0


def strictly_below(ab: Segment, c: Point) -> bool:
    return cross(ab.a.x, ab.a.y, ab.b.x, ab.b.y, c.x, c.y) < 0


def right_of_intersection(l1: Segment, l2: Segment, p: Point, strict: bool) -> bool:
    """Is p right of line(l1) ∩ line(l2)?  p must lie on the supporting line of l2.

    Slopes of l1 and l2 must differ.  When slope(l1) < slope(l2) the answer is
    the above-line test of p against l1; when slope(l1) > slope(l2) it is the
    below-line test.  `strict` decides the answer for p exactly on line(l1).
    """
    s = slope_cmp(l1.a.x, l1.a.y, l1.b.x, l1.b.y, l2.a.x, l2.a.y, l2.b.x, l2.b.y)
    if s == 0:
        raise ValueError("right_of_intersection requires segments of different slope")
    d = cross(l1.a.x, l1.a.y, l1.b.x, l1.b.y, p.x, p.y)
    if s < 0:  # slope(l1) < slope(l2): right of the crossing means above line(l1)
        return d > 0 if strict else d >= 0
    return d < 0 if strict else d <= 0


def _neg_seg(s: Segment) -> Segment:
    return Segment(Point(-s.b.x, -s.b.y), Point(-s.a.x, -s.a.y))


def wedge_intersects(alpha: Segment, gamma: Segment, beta: Segment, mirror: bool = False) -> bool:
    """Does the supporting line of beta meet the wedge of alpha and gamma?

    alpha and gamma must share the vertex alpha.b == gamma.a.  The wedge is the
    pair of halflines: line(alpha) left of the shared vertex and line(gamma)
    right of it, bounding a convex area that contains (+inf, -inf).  With
    mirror=True all inputs are point-reflected first, which answers the same
    question for the opposite orientation (area containing (-inf, +inf)).

    The test decomposes over the two arms; each arm test compares the crossing
    point of line(beta) with the arm line against the shared vertex, which is a
    right_of_intersection call (itself a slope and orientation combination).
    """
    if mirror:
        return wedge_intersects(_neg_seg(gamma), _neg_seg(alpha), _neg_seg(beta), mirror=False)
    if alpha.b != gamma.a:
        raise ValueError("wedge arms must share a vertex (alpha.b == gamma.a)")
    apex = alpha.b

    def hits_arm(arm: Segment, leftward: bool) -> bool:
        s = slope_cmp(beta.a.x, beta.a.y, beta.b.x, beta.b.y,
                      arm.a.x, arm.a.y, arm.b.x, arm.b.y)
        if s == 0:
            # Parallel: meets the arm only if collinear with it.
            return cross(arm.a.x, arm.a.y, arm.b.x, arm.b.y, beta.a.x, beta.a.y) == 0
        if leftward:
            # Crossing at or left of the apex, i.e. apex at or right of it.
            return right_of_intersection(beta, arm, apex, strict=False)
        # Crossing at or right of the apex.
        return not right_of_intersection(beta, arm, apex, strict=True)

    return hits_arm(alpha, leftward=True) or hits_arm(gamma, leftward=False)


def _on_segment(ax: int, ay: int, bx: int, by: int, px: int, py: int) -> bool:
    """p collinear with ab assumed; is p within the closed bounding box of ab?"""
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """Closed-segment intersection via orientation tests, never computing the point."""
    a, b, c, d = s1.a, s1.b, s2.a, s2.b
    d1 = cross(c.x, c.y, d.x, d.y, a.x, a.y)
    d2 = cross(c.x, c.y, d.x, d.y, b.x, b.y)
    d3 = cross(a.x, a.y, b.x, b.y, c.x, c.y)
    d4 = cross(a.x, a.y, b.x, b.y, d.x, d.y)
    if ((d1 > 0 > d2) or (d1 < 0 < d2)) and ((d3 > 0 > d4) or (d3 < 0 < d4)):
        return True
    if d1 == 0 and _on_segment(c.x, c.y, d.x, d.y, a.x, a.y):
        return True
    if d2 == 0 and _on_segment(c.x, c.y, d.x, d.y, b.x, b.y):
        return True
    if d3 == 0 and _on_segment(a.x, a.y, b.x, b.y, c.x, c.y):
        return True
    if d4 == 0 and _on_segment(a.x, a.y, b.x, b.y, d.x, d.y):
        return True
    return False
