from __future__ import annotations

import random

import pytest
from hypothesis import given

from linkirr.enumeration import catalog_codes
from linkirr.formats import (
    Graph6HeaderError,
    Graph6LengthError,
    Graph6PaddingError,
    parse_edge_list,
    parse_edge_list_doc,
    parse_graph6,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
)
from linkirr.graph import GraphError, build, complete, empty
from linkirr.isomorphism import decode
from strategies import graphs


def test_known_encodings():
    # standard graph6 examples
    assert write_graph6(empty(0)) == "?"
    assert write_graph6(empty(1)) == "@"
    assert write_graph6(build(5, [(0, 2), (0, 4), (1, 3), (3, 4)])) == "DQc"
    assert write_graph6(complete(4)) == "C~"
    assert parse_graph6(">>graph6<<C~") == complete(4)


def test_long_header():
    g = build(64, [(0, 63), (3, 4)])
    s = write_graph6(g)
    assert s.startswith("~?@?")
    assert parse_graph6(s) == g


@pytest.mark.parametrize("n", range(0, 7))
def test_catalog_round_trip_byte_exact(n):
    for code in catalog_codes(n):
        s = write_graph6(decode(n, code))
        assert write_graph6(parse_graph6(s)) == s


def test_random_round_trip_1000():
    rng = random.Random(2)
    for _ in range(1000):
        n = rng.choice([rng.randint(0, 20), rng.randint(60, 64)])
        p = rng.random()
        g = build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        assert parse_graph6(write_graph6(g)) == g


@given(graphs(max_n=16))
def test_round_trip_property(g):
    assert parse_graph6(write_graph6(g)) == g


def test_error_classes_are_distinct():
    with pytest.raises(Graph6HeaderError):
        parse_graph6("")
    with pytest.raises(Graph6HeaderError):
        parse_graph6("D!c")
    with pytest.raises(Graph6LengthError):
        parse_graph6("DQ")
    with pytest.raises(Graph6LengthError):
        parse_graph6("DQcc")
    with pytest.raises(Graph6PaddingError):
        parse_graph6("B~")  # 3 vertices use 3 bits; low padding bits set


def test_non_shortest_header_rejected():
    assert parse_graph6(write_graph6(empty(63))).n == 63
    with pytest.raises(Graph6HeaderError):
        parse_graph6("~??}")  # 62 must use the one-byte form


def test_read_lines():
    text = "C~\n\nDQc\n"
    assert [g.n for g in read_graph6_lines(text)] == [4, 5]


def test_edge_list_tolerant_parse():
    doc = "# triangle\n(0, 1), {1 2}\n2,0  # closing\n"
    g = parse_edge_list(doc)
    assert (g.n, g.edge_count) == (3, 3)
    d = parse_edge_list_doc("n=6\n1 2\n", base=1)
    assert d.order == 6 and d.to_graph().edge_count == 1


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphError):
        parse_edge_list("0 -1")
    with pytest.raises(GraphError):
        parse_edge_list("0 1", base=1)
    with pytest.raises(GraphError):
        parse_edge_list("1 1")


@given(graphs(max_n=12))
def test_edge_list_round_trip(g):
    for base in (0, 1):
        assert parse_edge_list(write_edge_list(g, base), base) == g
