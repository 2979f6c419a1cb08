"""Graphs printed in the literature, kept verbatim, plus named builtins."""

from __future__ import annotations

from functools import lru_cache

from .formats import parse_edge_list
from .graph import Graph, icosahedron

# 7-regular on 12 vertices, 0-based.
COUNTEREXAMPLE12 = r"""
{ (3, 4), (3, 7), (3, 1), (3, 9), (3, 5), (3, 11), (3, 2),
(4, 6), (4, 5), (4, 8), (4, 11), (4, 2), (4, 0),
(7, 10), \\ (7, 2), (7, 9), (7, 1), (7, 11), (7, 8),
(6, 1), (6, 11), (6, 5), (6, 10), (6, 0), (6, 9),
(0, 2), (0, 5),  (0, 11),\\ (0, 10), (0, 9),
(2, 8), (2, 1), (2, 9), (5, 10), (5, 11), (5, 8),
(10, 9), (10, 8), (10, 1), (1, 9), (1, 8), (11, 8) }
"""

# 5-regular planar on 16 vertices, 1-based.
PLANAR16 = r"""
{(1,2), (1,3), (1,4), (1,5), (1,6),
(2,6), (2,7), (2,8), (2,3),
(3,8), (3,9), (3,4),
(4,10), (4,11),\\ (4,5),
(5,11), (5,12), (5,6),
(6,12), (6,7),
(7,13), (7,14), (7,8),
(8,14), (8,9),
(9,14), (9,15),\\ (9,10),
(10,15), (10,16), (10,11),
(11,16), (11,12),
(12,16), (12,13),
(13,16), (13,15), (13,14),\\
(14,15),
(15,16)}
"""

# 5-regular planar on 18 vertices, 1-based; the source repeats some pairs.
PLANAR18 = r"""
{(1,2), (1,3), (1,4), (1,5), (1,6),
(2,6), (2,7), (2,8), (2,9),
(3,9), (3,10), (3,11), (3,4),
(4,11),\\ (4,12), (4,5),
(5,12), (5,13), (5,6),
(6,13), (6,14), (6,7),
(7,14), (7,15), (7,8),
(8,15), (8,16),\\ (8,9),
(9,16), (9,10),
(10,16), (10,17), (10,11),
(11,17), (11,12),
(12,17), (12,13),
(13,17),\\ (13,18), (13,14),
(14,18), (14,15),
(15,18), (15,16),
(16,18),
(17,10), (17,18), (17,12),\\ (17,11),
(18,13), (18,17), (18,16), (18,15), (18,14)}
"""

# The counterexample's link degree multisets as printed.
COUNTEREXAMPLE12_LINK_TABLE = {
    0: (2, 3, 3, 3, 4, 4, 5),
    1: (2, 3, 3, 4, 4, 4, 5),
    2: (2, 3, 3, 4, 4, 4, 4),
    3: (2, 3, 3, 3, 3, 4, 4),
    4: (3, 3, 3, 3, 4, 5, 5),
    5: (2, 3, 3, 4, 4, 5, 5),
    6: (2, 3, 3, 3, 4, 4, 5),
    7: (2, 3, 4, 4, 4, 4, 5),
    8: (3, 3, 3, 3, 3, 3, 4),
    9: (3, 3, 3, 4, 4, 4, 5),
    10: (3, 3, 3, 3, 4, 4, 4),
    11: (2, 3, 3, 3, 3, 5, 5),
}

BUILTIN_NAMES = ("counterexample12", "planar16", "planar18", "icosahedron", "unique6")


class UnknownBuiltinError(KeyError):
    pass


@lru_cache(maxsize=None)
def builtin(name: str) -> Graph:
    key = name.removeprefix("builtin:")
    if key == "counterexample12":
        return parse_edge_list(COUNTEREXAMPLE12, base=0)
    if key == "planar16":
        return parse_edge_list(PLANAR16, base=1)
    if key == "planar18":
        return parse_edge_list(PLANAR18, base=1)
    if key == "icosahedron":
        return icosahedron()
    if key == "unique6":
        from .enumeration import GenSpec, search_link_irregular

        hits = search_link_irregular(GenSpec(6)).hits
        if len(hits) != 1:
            raise RuntimeError(f"expected one order-6 link-irregular class, found {len(hits)}")
        return hits[0]
    raise UnknownBuiltinError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
