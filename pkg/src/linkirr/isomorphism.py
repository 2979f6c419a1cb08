"""Canonical forms and isomorphism tests for small graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import kernels
from .graph import Graph

BRUTE_FORCE_LIMIT = 8


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant fingerprint of a graph.

    ``code`` packs the upper triangle of the canonically relabeled adjacency
    matrix row by row, pair (0, 1) as the most significant bit.  The
    canonical labeling is the one with the smallest code among the leaves of
    the equitable-refinement search tree (not over all n! labelings).
    ``perm[v]`` is the canonical label of vertex ``v``.  Ordering and equality
    use ``(n, code)``.
    """

    n: int
    code: int
    perm: tuple[int, ...] = field(compare=False)

    @property
    def key(self) -> tuple[int, int]:
        return (self.n, self.code)


def encode(g: Graph) -> int:
    """Upper-triangle code of ``g`` under its current labeling."""
    code = 0
    for i in range(g.n - 1):
        r = g.rows[i]
        for j in range(i + 1, g.n):
            code = (code << 1) | ((r >> j) & 1)
    return code


def decode(n: int, code: int) -> Graph:
    return Graph(n, tuple(kernels.rows_from_code(n, code)))


def graph6_of_code(n: int, code: int) -> str:
    from .formats import write_graph6

    return write_graph6(decode(n, code))


def canonical_form(g: Graph, *, verify: bool = False) -> CanonicalForm:
    code, perm = kernels.canon(g.n, g.rows)
    cf = CanonicalForm(g.n, code, perm)
    if verify:
        check_canonical_form(g, cf)
    return cf


def canonical_graph(g: Graph) -> Graph:
    cf = canonical_form(g)
    return decode(g.n, cf.code)


def check_canonical_form(g: Graph, cf: CanonicalForm) -> None:
    if sorted(cf.perm) != list(range(g.n)):
        raise AssertionError("canonical perm is not a permutation")
    if encode(g.relabel(cf.perm)) != cf.code:
        raise AssertionError("canonical perm does not reproduce the code")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return kernels.canon_code(g.n, g.rows) == kernels.canon_code(h.n, h.rows)


def isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An edge-preserving bijection ``V(g) -> V(h)``, or ``None``."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.code != ch.code:
        return None
    inv = [0] * h.n
    for v, label in enumerate(ch.perm):
        inv[label] = v
    return {v: inv[cg.perm[v]] for v in range(g.n)}


def is_isomorphism(g: Graph, h: Graph, mapping: dict[int, int]) -> bool:
    """Check ``mapping`` edge by edge."""
    if g.n != h.n or sorted(mapping) != list(range(g.n)):
        return False
    if sorted(mapping.values()) != list(range(h.n)):
        return False
    return all(
        g.has_edge(u, v) == h.has_edge(mapping[u], mapping[v])
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every bijection.  Ground truth for tests, limited to n <= 8."""
    if max(g.n, h.n) > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_LIMIT}")
    if g.n != h.n:
        return False
    hedges = set(h.edges())
    if len(hedges) != g.edge_count:
        return False
    gedges = list(g.edges())
    for p in permutations(range(g.n)):
        if all(tuple(sorted((p[u], p[v]))) in hedges for u, v in gedges):
            return True
    return False
