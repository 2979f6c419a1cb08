from __future__ import annotations

import pytest
from hypothesis import given

from linkirr.datasets import builtin
from linkirr.graph import build, complete, cycle, icosahedron, induced_subgraph, make_named
from linkirr.isomorphism import are_isomorphic
from linkirr.links import (
    StaleVerdictError,
    Witness,
    check_witness,
    format_degree_table,
    is_link_irregular,
    link,
    link_degree_table,
    verdict_explain,
)
from strategies import graphs


def _irregular_by_definition(g):
    links = [induced_subgraph(g, g.neighbors(v)) for v in range(g.n)]
    return all(not are_isomorphic(links[u], links[v]) for u in range(g.n) for v in range(u + 1, g.n))


@given(graphs(max_n=9))
def test_verdict_matches_definition(g):
    v = is_link_irregular(g)
    assert v.irregular == _irregular_by_definition(g)
    if not v.irregular:
        assert check_witness(g, v.witness)
    else:
        assert len(set(v.link_codes)) == g.n


def test_witness_is_lexicographically_smallest_pair():
    v = is_link_irregular(cycle(5))
    assert (v.witness.u, v.witness.v) == (0, 1)


def test_k5_explanation_uses_common_neighbours():
    g = complete(5)
    text = verdict_explain(g, is_link_irregular(g))
    assert text.splitlines()[0] == "not link-irregular: L(0) ~= L(1) via identity on common neighbours"


def test_explicit_map_when_identity_fails():
    g = builtin("planar16")
    v = is_link_irregular(g)
    assert check_witness(g, v.witness)
    assert "map N(" in verdict_explain(g, v)


def test_stale_verdict_rejected():
    v = is_link_irregular(complete(4))
    with pytest.raises(StaleVerdictError):
        verdict_explain(cycle(4), v)


def test_bad_witness_rejected():
    g = cycle(6)
    assert not check_witness(g, Witness(0, 0, {1: 1, 5: 5}))
    assert not check_witness(g, Witness(0, 2, {1: 3, 4: 1}))
    twins = build(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3), (1, 2)])
    assert check_witness(twins, Witness(0, 4, {1: 2, 2: 1, 3: 3}))
    assert not check_witness(twins, Witness(0, 4, {1: 3, 2: 2, 3: 1}))


def test_link_profile_and_table_format():
    g = make_named("K4")
    lp = link(g, 0)
    assert lp.owner == 0 and lp.link.n == 3 and lp.degree_multiset == (2, 2, 2)
    assert format_degree_table(link_degree_table(g)).splitlines()[0] == "L(0): {2,2,2}"


def test_counterexample_link_zero():
    g = builtin("counterexample12")
    assert dict(link_degree_table(g))[0] == (2, 3, 3, 3, 4, 4, 5)


def test_vertex_transitive_graphs_are_not_link_irregular():
    for g in (icosahedron(), cycle(7), complete(6)):
        assert not is_link_irregular(g).irregular


def test_single_vertex_and_empty():
    assert is_link_irregular(build(1, [])).irregular
    assert is_link_irregular(build(0, [])).irregular
    assert not is_link_irregular(build(2, [])).irregular
