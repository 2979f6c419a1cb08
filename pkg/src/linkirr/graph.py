"""Immutable simple graphs stored as one neighbour bitmask per vertex."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid graph input (loops, out-of-range vertices)."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` has bit ``u`` set iff ``u`` and ``v`` are adjacent.  Equality
    is labeled equality; use :func:`linkirr.isomorphism.are_isomorphic` for
    structure.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full or (r >> v) & 1:
                raise GraphError(f"bad adjacency row for vertex {v}")
            x = r
            while x:
                low = x & -x
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                x ^= low

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def edge_count(self) -> int:
        return sum(_popcount(r) for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def degrees(self) -> list[int]:
        return [_popcount(r) for r in self.rows]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))


def bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with the given edges; repeated or reversed pairs collapse."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
    rows = [0] * n
    for pair in edges:
        u, v = pair
        if u == v:
            raise GraphError(f"self-loop {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in {pair!r} for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return _popcount(g.rows[v])


@dataclass(frozen=True)
class DegreeSummary:
    multiset: tuple[int, ...]
    distinct: frozenset[int]


def degree_summary(g: Graph) -> DegreeSummary:
    degs = tuple(sorted(g.degrees()))
    return DegreeSummary(degs, frozenset(degs))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((~r & full) & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabeled 0.. in ascending original order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    rows = []
    for v in keep:
        r = g.rows[v]
        x = 0
        for k, u in enumerate(keep):
            if (r >> u) & 1:
                x |= 1 << k
        rows.append(x)
    return Graph(len(keep), tuple(rows))


def girth(g: Graph) -> int | float:
    """Shortest cycle length, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in bits(g.rows[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """2-colouring when bipartite, otherwise an odd cycle as a vertex tuple."""
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    q.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, odd_cycle=_tree_cycle(u, w, parent, depth))
    return BipartiteResult(True, coloring=tuple(color))


def _tree_cycle(u, w, parent, depth):
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def regularity(g: Graph) -> int | None:
    """Common degree of a regular graph, ``None`` otherwise."""
    degs = set(g.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def check_invariants(g: Graph) -> None:
    """Assert symmetry, irreflexivity and the degree-sum formula."""
    for v in range(g.n):
        assert not g.has_edge(v, v), f"loop at {v}"
        for u in g.neighbors(v):
            assert g.has_edge(u, v), f"asymmetric {u},{v}"
    assert sum(g.degrees()) == 2 * g.edge_count


# --- named graphs -----------------------------------------------------------

def complete(n: int) -> Graph:
    return build(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return build(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return build(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def hypercube(k: int) -> Graph:
    n = 1 << k
    return build(n, ((u, u ^ (1 << i)) for u in range(n) for i in range(k) if u < u ^ (1 << i)))


def icosahedron() -> Graph:
    edges = []
    for i in range(5):
        up, nxt = 1 + i, 1 + (i + 1) % 5
        low, lownxt = 6 + i, 6 + (i + 1) % 5
        edges += [(0, up), (up, nxt), (11, low), (low, lownxt), (up, low), (nxt, low)]
    return build(12, edges)


_NAMED = re.compile(r"^(K|C|P|Q|E)_?\{?(\d+)(?:,(\d+))?\}?$")


def make_named(name: str) -> Graph:
    """Standard graphs by name: ``K5``, ``C6``, ``P3``, ``K3,3``, ``Q4``,
    ``E4`` (empty) and ``icosahedron``."""
    key = name.strip().replace(" ", "")
    if key.lower() == "icosahedron":
        return icosahedron()
    m = _NAMED.match(key)
    if not m:
        raise GraphError(f"unknown graph name {name!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "K":
            raise GraphError(f"unknown graph name {name!r}")
        return complete_bipartite(a, int(b))
    return {"K": complete, "C": cycle, "P": path, "Q": hypercube, "E": empty}[kind](a)


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1
