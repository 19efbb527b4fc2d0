"""Dynamic learned indexing over integer sets.

The core is a dynamically maintained piecewise-linear cover of the rank-space
point set, kept within 3/2 of the minimum possible segment count through
exact integer hull geometry.  On top of it sit an indexing structure with
output-sensitive range queries and a logarithmic-method baseline for
comparison, plus a benchmark CLI (python -m dynpgm.bench or the dynpgm
entry point).
"""

from .baseline import LogPGM, StaticBucket, build_static_cover
from .cover import (CoverEntry, CoverMode, CoverTree, DeleteResult,
                    InsertResult, is_blocked)
from .geometry import (Point, Segment, Shift, above_line, below_line,
                       right_of_intersection, segments_intersect, slope_less,
                       strictly_above, strictly_below, wedge_intersects)
from .hulls import AbsentValueError, DuplicateValueError, RankHullTree
from .index import DynamicIndex, Page, PageStore
from .oracles import (CoverKind, SortedOracle, brute_hull, brute_separable,
                      opt_cover_size)
from .separation import (EdgeNode, HullView, Orientation, SeparationKind,
                         SeparationResult, Wedge, intersection_test,
                         separating_line, separation_find,
                         weak_separating_line)

__all__ = [
    "AbsentValueError", "CoverEntry", "CoverKind", "CoverMode", "CoverTree",
    "DeleteResult", "DuplicateValueError", "DynamicIndex", "EdgeNode",
    "HullView", "InsertResult", "LogPGM", "Orientation", "Page", "PageStore",
    "Point", "RankHullTree", "Segment", "SeparationKind", "SeparationResult",
    "Shift", "SortedOracle", "StaticBucket", "Wedge", "above_line",
    "below_line", "brute_hull", "brute_separable", "build_static_cover",
    "intersection_test", "is_blocked", "opt_cover_size",
    "right_of_intersection", "segments_intersect", "separating_line",
    "separation_find", "slope_less", "strictly_above", "strictly_below",
    "wedge_intersects", "weak_separating_line",
]
