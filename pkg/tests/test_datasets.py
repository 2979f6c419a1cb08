from __future__ import annotations

import pytest

from linkirr.datasets import (
    BUILTIN_NAMES,
    COUNTEREXAMPLE12,
    PLANAR18,
    UnknownBuiltinError,
    builtin,
)
from linkirr.formats import parse_edge_list_doc
from linkirr.graph import girth, regularity
from linkirr.links import is_link_irregular


def test_counterexample_shape():
    g = builtin("counterexample12")
    assert (g.n, g.edge_count, regularity(g)) == (12, 42, 7)
    assert is_link_irregular(g).irregular
    assert len(parse_edge_list_doc(COUNTEREXAMPLE12).pairs) == 42


def test_planar16_shape():
    g = builtin("planar16")
    assert (g.n, g.edge_count, regularity(g)) == (16, 40, 5)


def test_planar18_is_ingested_verbatim():
    doc = parse_edge_list_doc(PLANAR18, base=1)
    assert len(doc.pairs) == 54  # as printed, repeats included
    g = builtin("planar18")
    # 8 printed pairs repeat earlier ones; what remains is 46 edges
    assert (g.n, g.edge_count) == (18, 46)
    degs = g.degrees()
    assert [v + 1 for v, d in enumerate(degs) if d != 5] == [6, 13]


def test_unique6():
    g = builtin("unique6")
    assert g.n == 6 and regularity(g) is None and girth(g) == 3
    assert is_link_irregular(g).irregular


def test_all_names_resolve_and_prefix_accepted():
    for name in BUILTIN_NAMES:
        assert builtin(name) == builtin("builtin:" + name)
    with pytest.raises(UnknownBuiltinError):
        builtin("petersen")
