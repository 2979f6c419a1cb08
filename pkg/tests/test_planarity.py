from __future__ import annotations

import random

import pytest
from hypothesis import given

from linkirr.datasets import builtin
from linkirr.enumeration import enumerate_graphs
from linkirr.graph import build, complete, complete_bipartite, cycle, hypercube, icosahedron, make_named
from linkirr.planarity import (
    Obstruction,
    check_embedding,
    check_planarity_result,
    is_planar,
    is_triangulation,
    planar_edge_bound_check,
    planar_embedding_exists,
    trace_faces,
    verify_obstruction,
)
from oracles import has_kuratowski_subdivision
from strategies import graphs


@pytest.mark.parametrize("name,kind", [("K5", "K5"), ("K3,3", "K3,3")])
def test_kuratowski_graphs(name, kind):
    g = make_named(name)
    res = is_planar(g)
    assert not res and res.embedding is None
    assert res.obstruction.kind == kind
    assert verify_obstruction(g, res.obstruction)


@pytest.mark.parametrize("n", range(1, 8))
def test_catalog_agrees_with_subdivision_oracle(n):
    for g in enumerate_graphs(n):
        res = is_planar(g)
        assert check_planarity_result(g, res)
        assert res.planar == (not has_kuratowski_subdivision(g))


@given(graphs(max_n=8))
def test_random_small_against_oracle(g):
    res = is_planar(g)
    assert check_planarity_result(g, res)
    assert res.planar == (not has_kuratowski_subdivision(g))


def test_certificates_on_larger_random_graphs():
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randint(9, 30)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        g = build(n, rng.sample(pairs, rng.randint(n - 1, min(3 * n, len(pairs)))))
        res = is_planar(g)
        assert check_planarity_result(g, res)
        if res.planar:
            assert planar_edge_bound_check(g) or g.n < 3


def test_edge_deletion_keeps_planarity():
    rng = random.Random(8)
    g = builtin("planar16")
    for _ in range(20):
        edges = list(g.edges())
        rng.shuffle(edges)
        h = build(g.n, edges[: rng.randint(0, len(edges))])
        assert is_planar(h).planar


def test_dense_rejection_still_certified():
    g = complete(12)
    res = is_planar(g)
    assert not res.planar and verify_obstruction(g, res.obstruction)
    ce = builtin("counterexample12")
    res = is_planar(ce)
    assert not res.planar and verify_obstruction(ce, res.obstruction)


def test_disconnected_euler_per_component():
    g = build(9, [(0, 1), (1, 2), (0, 2), (4, 5), (5, 6), (6, 7), (7, 4), (4, 6)])
    res = is_planar(g)
    assert res.planar and check_embedding(g, res.embedding)


def test_triangulation():
    assert is_triangulation(icosahedron())
    assert is_triangulation(complete(4))
    assert is_triangulation(complete(3))
    assert not is_triangulation(cycle(4))
    assert not is_triangulation(hypercube(3))
    with pytest.raises(ValueError):
        is_triangulation(complete(2))
    res = is_planar(icosahedron())
    assert all(len(f) == 3 for f in res.faces) and len(res.faces) == 20


def test_edge_bound_check():
    assert planar_edge_bound_check(builtin("planar16"))
    assert not planar_edge_bound_check(complete(5))
    five_regular_10 = build(10, [(i, (i + d) % 10) for i in range(10) for d in (1, 2, 5)])
    assert five_regular_10.edge_count == 25 and not planar_edge_bound_check(five_regular_10)
    with pytest.raises(ValueError):
        planar_edge_bound_check(complete(2))


def test_bad_certificates_rejected():
    g = complete(5)
    assert not verify_obstruction(g, Obstruction("K5", (0, 1, 2, 3), ()))
    good = is_planar(g).obstruction
    assert not verify_obstruction(complete_bipartite(3, 3), good)
    c4 = cycle(4)
    assert not check_embedding(c4, ((1, 3), (0, 2), (1, 3), (2,)))
    # a non-planar rotation of K4: both orientations at one vertex flipped
    k4 = complete(4)
    rot = [list(r) for r in is_planar(k4).embedding]
    rot[0] = rot[0][::-1]
    assert not check_embedding(k4, rot)


def test_planar_embedding_exists_matches():
    for g in (complete(5), icosahedron(), builtin("planar18")):
        assert planar_embedding_exists(g) == is_planar(g).planar


def test_faces_cover_every_dart_once():
    g = builtin("planar16")
    res = is_planar(g)
    darts = [(f[i], f[(i + 1) % len(f)]) for f in trace_faces(g, res.embedding) for i in range(len(f))]
    assert len(darts) == len(set(darts)) == 2 * g.edge_count
