from __future__ import annotations

import pytest

from linkirr.enumeration import (
    CHECKPOINT_MAGIC,
    EnumerationLimitError,
    GenSpec,
    ParityError,
    catalog_codes,
    count_labeled_classes,
    enumerate_graphs,
    enumerate_regular,
    feasible_degrees,
    regular_codes,
    regular_search_via_complement,
    search_link_irregular,
)
from linkirr.graph import complement, regularity
from linkirr.isomorphism import are_isomorphic, canonical_form
from linkirr.links import is_link_irregular
from oracles import burnside_graph_count


@pytest.mark.parametrize("n", range(0, 9))
def test_catalog_counts_match_burnside(n):
    assert len(catalog_codes(n)) == burnside_graph_count(n) if n else 1


@pytest.mark.parametrize("n", range(0, 8))
def test_catalog_matches_labeled_oracle(n):
    assert len(catalog_codes(n)) == count_labeled_classes(n)


def test_stream_is_ascending_canonical_and_distinct():
    codes = [canonical_form(g).code for g in enumerate_graphs(6)]
    assert codes == sorted(set(codes))
    assert codes == list(catalog_codes(6))


def test_connected_filter():
    assert sum(1 for _ in enumerate_graphs(5, connected_only=True)) == 21


@pytest.mark.parametrize("n,r,count", [(4, 3, 1), (8, 2, 3), (8, 3, 6), (9, 4, 16), (10, 3, 21), (10, 4, 60), (11, 4, 266)])
def test_regular_counts(n, r, count):
    assert len(regular_codes(n, r)) == count


@pytest.mark.parametrize("n,r", [(6, 2), (7, 2), (8, 3), (8, 4)])
def test_regular_matches_filtered_catalog(n, r):
    want = sorted(canonical_form(g).code for g in enumerate_graphs(n) if regularity(g) == r)
    assert list(regular_codes(n, r)) == want


@pytest.mark.parametrize("n,r", [(8, 5), (9, 6), (10, 6), (10, 7), (11, 8)])
def test_complement_duality(n, r):
    direct = regular_codes(n, r, "direct")
    via = regular_codes(n, r, "complement")
    assert direct == via
    dual = sorted(canonical_form(complement(g)).code for g in enumerate_regular(n, n - 1 - r))
    assert list(direct) == dual


def test_parity_and_limits():
    with pytest.raises(ParityError):
        GenSpec(9, 5)
    with pytest.raises(ValueError):
        GenSpec(5, 5)
    with pytest.raises(EnumerationLimitError):
        GenSpec(10)
    with pytest.raises(EnumerationLimitError):
        GenSpec(13, 4)
    with pytest.raises(ParityError):
        list(enumerate_regular(9, 5))


def test_search_small_orders():
    assert search_link_irregular(GenSpec(5)).hit_count == 0
    res = search_link_irregular(GenSpec(6))
    assert (res.hit_count, res.examined) == (1, 156)
    g = res.hits[0]
    assert g.edge_count == 9 and sorted(g.degrees()) == [2, 2, 3, 3, 4, 4]


def test_search_hits_are_valid_and_distinct():
    res = search_link_irregular(GenSpec(7))
    assert res.examined == 1044
    assert all(is_link_irregular(h).irregular for h in res.hits)
    codes = [canonical_form(h).code for h in res.hits]
    assert len(set(codes)) == len(codes) == res.hit_count


def test_search_deterministic_across_workers():
    a = search_link_irregular(GenSpec(7), workers=1)
    b = search_link_irregular(GenSpec(7), workers=2)
    assert a.hits == b.hits and a.examined == b.examined


def test_regular_search_routes_agree():
    a = search_link_irregular(GenSpec(8, 5), route="direct")
    b = regular_search_via_complement(8, 5)
    assert a.hits == b.hits == ()
    assert a.examined == b.examined == 3
    with pytest.raises(ValueError):
        regular_search_via_complement(8, 3)


def test_nine_six_via_complement():
    res = regular_search_via_complement(9, 6)
    assert res.hit_count == 0 and res.examined == 4


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "run.ck"
    full = search_link_irregular(GenSpec(7), checkpoint=ck)
    lines = ck.read_text().splitlines()
    assert lines[0] == CHECKPOINT_MAGIC and lines[1] == "spec n=7 r=- connected=0"
    roots = [i for i, ln in enumerate(lines) if ln.startswith("root ")]
    assert len(roots) == len(catalog_codes(6))
    # keep the first 40 completed roots, as if interrupted
    ck.write_text("\n".join(lines[: roots[39] + 1]) + "\n")
    resumed = search_link_irregular(GenSpec(7), checkpoint=ck)
    assert resumed.wall_stats["resumed_roots"] == 40
    assert resumed.hits == full.hits and resumed.examined == full.examined
    again = search_link_irregular(GenSpec(7), checkpoint=ck)
    assert again.wall_stats["resumed_roots"] == len(catalog_codes(6))
    assert again.hits == full.hits


def test_checkpoint_spec_mismatch(tmp_path):
    ck = tmp_path / "run.ck"
    search_link_irregular(GenSpec(5), checkpoint=ck)
    with pytest.raises(ValueError):
        search_link_irregular(GenSpec(6), checkpoint=ck)


def test_feasible_degrees():
    assert feasible_degrees(9) == [0, 2, 4, 6, 8]
    assert feasible_degrees(6) == [0, 1, 2, 3, 4, 5]


@pytest.mark.slow
def test_counterexample_found_by_complement_search():
    from linkirr.datasets import builtin

    res = regular_search_via_complement(12, 7)
    assert res.examined == 1547
    target = builtin("counterexample12")
    assert any(are_isomorphic(h, target) for h in res.hits)
