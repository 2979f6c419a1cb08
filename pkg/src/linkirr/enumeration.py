"""Isomorph-free generation of graphs and regular graphs, and the search
for link-irregular graphs over those catalogs.

Every catalog is a sorted tuple of canonical codes (see
:mod:`linkirr.isomorphism`), so streams come out in ascending code order.

All graphs of order n are grown one vertex at a time from the order n-1
catalog.  A child is kept only by the parent obtained by deleting its
canonically-last vertex, which partitions the order-n classes among the
parents; the search can therefore process parents independently.

Regular graphs are grown by saturating one vertex at a time.  Every edge of
a partial state touches a saturated vertex, so the remaining degree deficits
must form a graphical sequence on the unsaturated vertices, which the
Erdos-Gallai test decides exactly.  States are deduplicated by canonical
code.  For r above (n-1)/2 the (n-1-r)-regular catalog is complemented.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from . import kernels
from .graph import Graph, complement, is_connected
from .isomorphism import decode
from .links import is_link_irregular

log = logging.getLogger(__name__)

ENUMERATION_LIMIT = 9
REGULAR_LIMIT = 12
CHECKPOINT_MAGIC = "linkirr-checkpoint 1"


class EnumerationLimitError(ValueError):
    pass


class ParityError(ValueError):
    """n * r is odd, so no r-regular graph of order n exists."""


@dataclass(frozen=True)
class GenSpec:
    n: int
    regularity: int | None = None
    connected_only: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("order must be non-negative")
        r = self.regularity
        if r is not None:
            if not 0 <= r <= max(self.n - 1, 0):
                raise ValueError(f"degree {r} impossible on {self.n} vertices")
            if (self.n * r) % 2:
                raise ParityError(f"n*r = {self.n * r} is odd")
            if self.n > REGULAR_LIMIT:
                raise EnumerationLimitError(f"regular generation limited to n <= {REGULAR_LIMIT}")
        elif self.n > ENUMERATION_LIMIT:
            raise EnumerationLimitError(f"full enumeration limited to n <= {ENUMERATION_LIMIT}")

    def describe(self) -> str:
        r = "-" if self.regularity is None else str(self.regularity)
        return f"n={self.n} r={r} connected={int(self.connected_only)}"


@dataclass
class SearchResult:
    spec: GenSpec
    examined: int
    hits: tuple[Graph, ...]
    wall_stats: dict = field(default_factory=dict)
    route: str = "all"

    @property
    def hit_count(self) -> int:
        return len(self.hits)


# --- catalogs --------------------------------------------------------------

@lru_cache(maxsize=None)
def catalog_codes(n: int) -> tuple[int, ...]:
    """Sorted canonical codes of all graphs of order ``n``."""
    if n > ENUMERATION_LIMIT:
        raise EnumerationLimitError(f"full enumeration limited to n <= {ENUMERATION_LIMIT}")
    if n <= 1:
        return (0,)
    codes = []
    for parent in catalog_codes(n - 1):
        codes.extend(owned_children(n - 1, parent))
    codes.sort()
    if any(a == b for a, b in zip(codes, codes[1:])):
        raise AssertionError(f"duplicate class in order-{n} catalog")
    return tuple(codes)


def owned_children(n: int, parent_code: int) -> list[int]:
    """Order n+1 classes owned by the order-n parent with this code."""
    return kernels.extend_children(n, kernels.rows_from_code(n, parent_code), parent_code)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    for code in catalog_codes(n):
        g = decode(n, code)
        if connected_only and not is_connected(g):
            continue
        yield g


def _popcount(x: int) -> int:
    return bin(x).count("1")


@lru_cache(maxsize=None)
def regular_codes(n: int, r: int, route: str = "auto") -> tuple[int, ...]:
    """Sorted canonical codes of r-regular graphs of order n.

    ``route`` is ``"direct"``, ``"complement"`` or ``"auto"`` (complement
    exactly when n-1-r < r).
    """
    GenSpec(n, r)
    if route == "auto":
        route = "complement" if n - 1 - r < r else "direct"
    if route == "complement":
        base = regular_codes(n, n - 1 - r, "direct")
        out = []
        for code in base:
            g = complement(decode(n, code))
            out.append(kernels.canon_code(n, g.rows))
        return tuple(sorted(out))
    if route != "direct":
        raise ValueError(f"unknown route {route!r}")
    seen = {0}
    frontier = [0]
    finals = []
    while frontier:
        nxt = []
        for code in frontier:
            rows = kernels.rows_from_code(n, code)
            if all(_popcount(x) == r for x in rows):
                finals.append(code)
                continue
            for child in kernels.regular_children(n, r, rows):
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        frontier = sorted(nxt)
    log.debug("regular(%d,%d): %d states, %d graphs", n, r, len(seen), len(finals))
    return tuple(sorted(finals))


def enumerate_regular(n: int, r: int, connected_only: bool = False,
                      route: str = "auto") -> Iterator[Graph]:
    for code in regular_codes(n, r, route):
        g = decode(n, code)
        if connected_only and not is_connected(g):
            continue
        yield g


def count_labeled_classes(n: int) -> int:
    """Number of distinct canonical codes over all labeled graphs on n vertices."""
    return kernels.count_labeled_classes(n)


# --- search ---------------------------------------------------------------

def _check_codes(n: int, codes, connected_only: bool):
    examined = 0
    hits = []
    for code in codes:
        g = decode(n, code)
        if connected_only and not is_connected(g):
            continue
        examined += 1
        if is_link_irregular(g).irregular:
            hits.append(kernels.canon_code(n, g.rows))
    return examined, hits


def _process_root(task):
    kind, n, connected_only, code = task
    if kind == "parent":
        return _check_codes(n, owned_children(n - 1, code), connected_only)
    return _check_codes(n, [code], connected_only)


def _roots(spec: GenSpec, route: str):
    n, r = spec.n, spec.regularity
    if r is None:
        if n <= 1:
            return "graph", list(catalog_codes(n))
        return "parent", list(catalog_codes(n - 1))
    if route == "complement":
        codes = [kernels.canon_code(n, complement(decode(n, c)).rows)
                 for c in regular_codes(n, n - 1 - r, "direct")]
        return "graph", sorted(codes)
    return "graph", list(regular_codes(n, r, "direct"))


def search_link_irregular(spec: GenSpec, workers: int = 1,
                          checkpoint: str | os.PathLike | None = None,
                          route: str = "auto") -> SearchResult:
    """Every class in the catalog described by ``spec`` that is
    link-irregular.  Hits are canonical representatives in code order and do
    not depend on ``workers``.

    With ``checkpoint`` each completed root (a parent graph, or a regular
    graph) is appended to the file; rerunning with the same file resumes.
    """
    if spec.regularity is not None and route == "auto":
        route = "complement" if spec.n - 1 - spec.regularity < spec.regularity else "direct"
    if spec.regularity is None:
        route = "all"
    t0 = time.perf_counter()
    kind, roots = _roots(spec, route)
    t_gen = time.perf_counter() - t0

    done: dict[int, int] = {}
    hits: set[int] = set()
    ck = None
    if checkpoint is not None:
        done, hits = _load_checkpoint(Path(checkpoint), spec)
        ck = open(checkpoint, "a")
        if not Path(checkpoint).stat().st_size:
            ck.write(f"{CHECKPOINT_MAGIC}\nspec {spec.describe()}\n")
    examined = sum(done.values())
    root_n = spec.n - 1 if kind == "parent" else spec.n
    todo = [c for c in roots if c not in done]
    tasks = [(kind, spec.n, spec.connected_only, c) for c in todo]
    try:
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(_process_root, tasks, chunksize=max(1, len(tasks) // (8 * workers)))
                examined += _collect(spec.n, root_n, todo, results, hits, ck)
        else:
            examined += _collect(spec.n, root_n, todo, map(_process_root, tasks), hits, ck)
    finally:
        if ck is not None:
            ck.close()
    total = time.perf_counter() - t0
    stats = {
        "roots": len(roots),
        "resumed_roots": len(roots) - len(todo),
        "root_kind": kind,
        "workers": workers,
        "backend": kernels.BACKEND,
        "prepare_s": round(t_gen, 4),
        "total_s": round(total, 4),
    }
    return SearchResult(spec, examined,
                        tuple(decode(spec.n, c) for c in sorted(hits)), stats, route)


def _collect(n, root_n, todo, results, hits, ck):
    from .formats import write_graph6

    examined = 0
    for root, (ex, found) in zip(todo, results):
        examined += ex
        for c in found:
            if c not in hits:
                hits.add(c)
                if ck is not None:
                    ck.write(f"hit {write_graph6(decode(n, c))}\n")
        if ck is not None:
            ck.write(f"root {write_graph6(decode(root_n, root))} {ex}\n")
            ck.flush()
    return examined


def _load_checkpoint(path: Path, spec: GenSpec):
    from .formats import parse_graph6

    done: dict[int, int] = {}
    hits: set[int] = set()
    if not path.exists() or not path.stat().st_size:
        return done, hits
    lines = path.read_text().splitlines()
    if len(lines) < 2 or lines[0] != CHECKPOINT_MAGIC:
        raise ValueError(f"{path}: not a checkpoint file")
    if lines[1] != f"spec {spec.describe()}":
        raise ValueError(f"{path}: checkpoint is for '{lines[1][5:]}', not '{spec.describe()}'")
    for ln in lines[2:]:
        parts = ln.split()
        if not parts:
            continue
        if parts[0] == "root" and len(parts) == 3:
            g = parse_graph6(parts[1])
            done[kernels.canon_code(g.n, g.rows)] = int(parts[2])
        elif parts[0] == "hit" and len(parts) == 2:
            g = parse_graph6(parts[1])
            hits.add(kernels.canon_code(g.n, g.rows))
        else:
            raise ValueError(f"{path}: bad checkpoint line {ln!r}")
    return done, hits


def regular_search_via_complement(n: int, r: int, workers: int = 1,
                                  connected_only: bool = False) -> SearchResult:
    """Search r-regular graphs by complementing the (n-1-r)-regular catalog."""
    if not n - 1 - r < r:
        raise ValueError("complement route needs n-1-r < r; search directly instead")
    return search_link_irregular(GenSpec(n, r, connected_only), workers, route="complement")


def feasible_degrees(n: int) -> list[int]:
    return [r for r in range(n) if (n * r) % 2 == 0]


def search_all_degrees(n: int, workers: int = 1, connected_only: bool = False) -> list[SearchResult]:
    return [search_link_irregular(GenSpec(n, r, connected_only), workers)
            for r in feasible_degrees(n)]
