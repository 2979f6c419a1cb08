from __future__ import annotations

import random

import pytest
from hypothesis import given

from linkirr.enumeration import enumerate_graphs
from linkirr.graph import build, cycle, complete_bipartite
from linkirr.isomorphism import (
    are_isomorphic,
    brute_force_isomorphic,
    canonical_form,
    canonical_graph,
    check_canonical_form,
    decode,
    encode,
    is_isomorphism,
    isomorphism,
)
from oracles import labeled_isomorphic
from strategies import graphs_with_perm


def _random_graph(rng, n):
    p = rng.random()
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_relabeling_invariance_1000_trials():
    rng = random.Random(7)
    for _ in range(1000):
        g = _random_graph(rng, rng.randint(0, 12))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        cg, ch = canonical_form(g, verify=True), canonical_form(h, verify=True)
        assert cg == ch


@given(graphs_with_perm(max_n=14))
def test_isomorphism_map_is_valid(gp):
    g, perm = gp
    h = g.relabel(perm)
    m = isomorphism(g, h)
    assert m is not None and is_isomorphism(g, h, m)


def test_encode_decode_round_trip():
    g = build(5, [(0, 4), (1, 2), (2, 3)])
    assert decode(5, encode(g)) == g
    cf = canonical_form(g)
    check_canonical_form(g, cf)
    assert encode(canonical_graph(g)) == cf.code


def test_canonical_code_is_a_class_invariant_exhaustively():
    from itertools import permutations

    rng = random.Random(3)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(1, 6))
        codes = {encode(g.relabel(p)) for p in permutations(range(g.n))}
        cf = canonical_form(g)
        assert cf.code in codes
        assert {canonical_form(decode(g.n, c)).code for c in codes} == {cf.code}


@pytest.mark.parametrize("n", range(1, 7))
def test_agrees_with_brute_force_on_catalog(n):
    rng = random.Random(n)
    cat = list(enumerate_graphs(n))
    relabeled = []
    for g in cat:
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled.append(g.relabel(perm))
    for i, g in enumerate(cat):
        for j in range(i, len(cat)):
            h = relabeled[j]
            assert are_isomorphic(g, h) == brute_force_isomorphic(g, h) == (i == j)


def test_brute_force_oracle_agrees_with_independent_oracle():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 6)
        g, h = _random_graph(rng, n), _random_graph(rng, n)
        assert brute_force_isomorphic(g, h) == labeled_isomorphic(g, h)


def test_known_non_isomorphic_pair_with_equal_degrees():
    two_triangles = build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not are_isomorphic(two_triangles, cycle(6))
    assert isomorphism(two_triangles, cycle(6)) is None
    assert not are_isomorphic(complete_bipartite(3, 3), build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]))


def test_brute_force_limit():
    g = build(9, [])
    with pytest.raises(ValueError):
        brute_force_isomorphic(g, g)
