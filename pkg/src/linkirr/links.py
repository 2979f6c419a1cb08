"""Vertex links and the link-irregularity decision."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from . import kernels
from .graph import Graph, induced_subgraph
from .isomorphism import CanonicalForm, canonical_form, graph6_of_code, is_isomorphism, isomorphism


class StaleVerdictError(ValueError):
    """The verdict was computed for a different graph."""


@dataclass(frozen=True)
class LinkProfile:
    owner: int
    link: Graph
    degree_multiset: tuple[int, ...]
    canon: CanonicalForm


def link(g: Graph, v: int) -> LinkProfile:
    lk = induced_subgraph(g, g.neighbors(v))
    return LinkProfile(v, lk, tuple(sorted(lk.degrees())), canonical_form(lk))


def link_degree_table(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    rows = []
    for v in range(g.n):
        lk = induced_subgraph(g, g.neighbors(v))
        rows.append((v, tuple(sorted(lk.degrees()))))
    return rows


def format_degree_table(table) -> str:
    return "\n".join(
        f"L({v}): {{{','.join(map(str, degs))}}}" for v, degs in table
    )


@dataclass(frozen=True)
class Witness:
    u: int
    v: int
    mapping: dict[int, int]  # N(u) -> N(v), original vertex names


@dataclass(frozen=True)
class Verdict:
    irregular: bool
    witness: Witness | None
    graph: Graph
    link_codes: tuple[tuple[int, int], ...]  # (order, code) per vertex, when computed


def _link_key(g: Graph, v: int):
    lk = induced_subgraph(g, g.neighbors(v))
    return lk, (lk.n, lk.edge_count, tuple(sorted(lk.degrees())))


def is_link_irregular(g: Graph) -> Verdict:
    """Decide whether all links are pairwise non-isomorphic.

    Links are bucketed by (order, size, degree multiset) first; only links
    sharing a bucket are canonicalised.  A negative verdict carries the
    lexicographically smallest pair ``(u, v)`` with isomorphic links.
    """
    buckets = defaultdict(list)
    links = []
    for v in range(g.n):
        lk, key = _link_key(g, v)
        links.append(lk)
        buckets[key].append(v)
    codes: dict[int, tuple[int, int]] = {}
    best = None
    for members in buckets.values():
        if len(members) < 2:
            continue
        seen = {}
        for v in members:
            lk = links[v]
            c = (lk.n, kernels.canon_code(lk.n, lk.rows))
            codes[v] = c
            if c in seen:
                pair = (seen[c], v)
                if best is None or pair < best:
                    best = pair
            else:
                seen[c] = v
    if best is not None:
        u, v = best
        return Verdict(False, _witness(g, u, v), g, ())
    for v in range(g.n):
        if v not in codes:
            lk = links[v]
            codes[v] = (lk.n, kernels.canon_code(lk.n, lk.rows))
    return Verdict(True, None, g, tuple(codes[v] for v in range(g.n)))


def _witness(g: Graph, u: int, v: int) -> Witness:
    nu, nv = g.neighbors(u), g.neighbors(v)
    common = set(nu) & set(nv)
    rest_u = [x for x in nu if x not in common]
    rest_v = [x for x in nv if x not in common]
    natural = {x: x for x in common} | dict(zip(rest_u, rest_v))
    w = Witness(u, v, natural)
    if check_witness(g, w):
        return w
    m = isomorphism(induced_subgraph(g, nu), induced_subgraph(g, nv))
    assert m is not None
    return Witness(u, v, {nu[a]: nv[b] for a, b in m.items()})


def check_witness(g: Graph, w: Witness) -> bool:
    """Verify that the witness mapping is an isomorphism L(u) -> L(v)."""
    nu, nv = g.neighbors(w.u), g.neighbors(w.v)
    if w.u == w.v or sorted(w.mapping) != nu or sorted(w.mapping.values()) != nv:
        return False
    iu = {x: i for i, x in enumerate(nu)}
    iv = {x: i for i, x in enumerate(nv)}
    local = {iu[a]: iv[b] for a, b in w.mapping.items()}
    return is_isomorphism(induced_subgraph(g, nu), induced_subgraph(g, nv), local)


def verdict_explain(g: Graph, verdict: Verdict) -> str:
    if verdict.graph != g:
        raise StaleVerdictError("verdict belongs to a different graph")
    if not verdict.irregular:
        w = verdict.witness
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(w.mapping.items()))
        common = set(g.neighbors(w.u)) & set(g.neighbors(w.v))
        same = bool(common) and all(w.mapping[x] == x for x in common)
        how = "identity on common neighbours" if same else "explicit map"
        return (
            f"not link-irregular: L({w.u}) ~= L({w.v}) via {how}\n"
            f"  map N({w.u}) -> N({w.v}): {{{pairs}}}"
        )
    lines = [f"link-irregular: all {g.n} links pairwise non-isomorphic"]
    for v, (k, code) in enumerate(verdict.link_codes):
        lines.append(f"  L({v}): order {k}, canonical graph6 {graph6_of_code(k, code)}")
    return "\n".join(lines)
