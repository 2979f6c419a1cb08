"""Acceptance battery: every published claim the toolkit can check exactly.

Each criterion returns a :class:`CriterionResult` with an anchor naming the
claim it checks, a pass flag, detail lines and its runtime against budget.
Failures are reported with the offending objects; nothing is softened.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .bounds import asymptotic_edge_lower, edge_bounds, g_exact, g_lower_bound, link_distinctness_edge_floor, planar_crossover
from .datasets import COUNTEREXAMPLE12_LINK_TABLE, builtin
from .enumeration import (
    GenSpec,
    catalog_codes,
    count_labeled_classes,
    enumerate_graphs,
    regular_search_via_complement,
    search_link_irregular,
)
from .formats import parse_graph6, write_graph6
from .graph import Graph, build, girth, induced_subgraph, is_bipartite, make_named, regularity
from .isomorphism import are_isomorphic, brute_force_isomorphic, canonical_form, check_canonical_form, decode
from .links import check_witness, format_degree_table, is_link_irregular, link_degree_table
from .planarity import check_planarity_result, is_planar, is_triangulation


@dataclass
class CriterionResult:
    number: int
    title: str
    anchor: str
    passed: bool
    detail: list[str] = field(default_factory=list)
    seconds: float = 0.0
    budget_s: float = 0.0

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return (f"[{self.status}] {self.number:>2}. {self.title} -- {self.anchor} "
                f"({self.seconds:.2f}s of {self.budget_s:g}s)")


class _Checks:
    """Collects named sub-checks so a failure names exactly what broke."""

    def __init__(self) -> None:
        self.ok = True
        self.lines: list[str] = []

    def __call__(self, cond: bool, what: str) -> bool:
        self.lines.append(f"{'ok  ' if cond else 'FAIL'} {what}")
        self.ok = self.ok and bool(cond)
        return bool(cond)

    def note(self, text: str) -> None:
        self.lines.append(f"note {text}")


class Battery:
    """Runs criteria, sharing search results between them."""

    def __init__(self, workers: int = 1, seed: int = 20240601) -> None:
        self.workers = workers
        self.seed = seed
        self._searches: dict[GenSpec, object] = {}

    def search(self, spec: GenSpec):
        if spec not in self._searches:
            self._searches[spec] = search_link_irregular(spec, self.workers)
        return self._searches[spec]

    # 1
    def catalog_counts(self, c: _Checks) -> None:
        want = [1, 2, 4, 11, 34, 156]
        got = [sum(1 for _ in enumerate_graphs(n)) for n in range(1, 7)]
        c(got == want, f"class counts n=1..6: {got} (expected {want})")

    # 2
    def small_orders(self, c: _Checks) -> None:
        r5, r6, r7 = (self.search(GenSpec(n)) for n in (5, 6, 7))
        c(r5.hit_count == 0, f"n=5: {r5.hit_count} hits / {r5.examined} examined")
        c(r6.hit_count == 1, f"n=6: {r6.hit_count} hits / {r6.examined} examined")
        c(r7.hit_count >= 1, f"n=7: {r7.hit_count} hits / {r7.examined} examined")
        wide = [h for h in r7.hits if len(set(h.degrees())) == 5]
        c(bool(wide), f"n=7: {len(wide)} hits with 5 distinct degrees"
          + (f", e.g. {write_graph6(wide[0])}" if wide else ""))

    # 3
    def no_small_regular(self, c: _Checks) -> None:
        for n in range(6, 10):
            for r in range(1, n):
                if (n * r) % 2:
                    continue
                res = self.search(GenSpec(n, r))
                c(res.hit_count == 0,
                  f"n={n} r={r} via {res.route}: {res.hit_count} hits / {res.examined} examined")

    # 4
    def counterexample(self, c: _Checks) -> None:
        g = builtin("counterexample12")
        c(g.n == 12 and g.edge_count == 42 and regularity(g) == 7,
          f"order {g.n}, size {g.edge_count}, regularity {regularity(g)}")
        v = is_link_irregular(g)
        c(v.irregular, f"link-irregular: {v.irregular}")
        table = dict(link_degree_table(g))
        bad = [u for u in range(12) if table[u] != COUNTEREXAMPLE12_LINK_TABLE[u]]
        c(not bad, "link degree table matches the printed table row for row")
        for u in bad:
            c.note("computed  " + format_degree_table([(u, table[u])]))
            c.note("printed   " + format_degree_table([(u, COUNTEREXAMPLE12_LINK_TABLE[u])]))
        l0 = induced_subgraph(g, g.neighbors(0))
        l6 = induced_subgraph(g, g.neighbors(6))
        c(table[0] == table[6], "L(0) and L(6) share a degree multiset")
        c(not are_isomorphic(l0, l6), "L(0) and L(6) are not isomorphic")
        shared = [(a, b) for a in table for b in table if a < b and table[a] == table[b]]
        c.note(f"vertex pairs sharing a link degree multiset: {shared}")

    # 5
    def counterexample_search(self, c: _Checks, budget_s: float) -> None:
        t0 = time.perf_counter()
        res = regular_search_via_complement(12, 7, self.workers)
        spent = time.perf_counter() - t0
        target = builtin("counterexample12")
        match = [h for h in res.hits if are_isomorphic(h, target)]
        c.note(f"4-regular classes complemented: {res.examined}, search {spent:.1f}s")
        if spent > budget_s:
            c.note("DEGRADED: enumeration exceeded its budget; falling back to the "
                   "builtin checks and enumeration property suites")
            inner = _Checks()
            self.counterexample(inner)
            self.properties(inner)
            c(inner.ok, "degraded fallback")
            return
        c(res.hit_count >= 1, f"{res.hit_count} link-irregular 7-regular classes on 12 vertices")
        c(bool(match), "a hit is isomorphic to the builtin counterexample")
        if match:
            c.note(f"matching hit {write_graph6(match[0])}")

    # 6
    def planarity_suite(self, c: _Checks) -> None:
        for name in ("K5", "K3,3"):
            g = make_named(name)
            res = is_planar(g)
            c(not res.planar and check_planarity_result(g, res),
              f"{name}: nonplanar with verified {res.obstruction.kind if res.obstruction else '?'} obstruction")
        ico = builtin("icosahedron")
        res = is_planar(ico)
        c(res.planar and check_planarity_result(ico, res), "icosahedron planar with verified embedding")
        c(regularity(ico) == 5 and ico.edge_count == 30, f"icosahedron 5-regular, e={ico.edge_count}")
        c(is_triangulation(ico), "icosahedron is a triangulation")
        c(not is_link_irregular(ico).irregular, "icosahedron is not link-irregular")
        for name in ("planar16", "planar18"):
            g = builtin(name)
            r = regularity(g)
            c(r == 5, f"{name}: n={g.n} e={g.edge_count} regularity={r}")
            if r != 5:
                degs = g.degrees()
                odd = [(v + 1, d) for v, d in enumerate(degs) if d != 5]
                c.note(f"{name}: vertices (as printed) with degree != 5: {odd}")
                heavy = [v for v, d in enumerate(degs) if d > 5]
                if len(heavy) == 2 and g.has_edge(*heavy):
                    h = build(g.n, [e for e in g.edges() if e != tuple(heavy)])
                    c.note(f"{name}: without edge {tuple(v + 1 for v in heavy)}: e={h.edge_count} "
                           f"regularity={regularity(h)} planar={is_planar(h).planar} "
                           f"link-irregular={is_link_irregular(h).irregular}")
            res = is_planar(g)
            c(res.planar and check_planarity_result(g, res), f"{name}: planar with verified embedding")
            v = is_link_irregular(g)
            ok = not v.irregular and check_witness(g, v.witness)
            c(ok, f"{name}: not link-irregular, witness "
              + (f"L({v.witness.u}) ~= L({v.witness.v}) verified" if v.witness else "missing"))

    # 7 and 8 share hits
    def _catalog_hits(self):
        return {n: self.search(GenSpec(n)).hits for n in (6, 7, 8)}

    def edge_bound_sweep(self, c: _Checks) -> None:
        for n, hits in self._catalog_hits().items():
            b = edge_bounds(n)
            asym = asymptotic_edge_lower(n)
            low = [h for h in hits if h.edge_count < b.edge_lower]
            high = [h for h in hits if h.edge_count > b.edge_upper]
            under = [h for h in hits if h.edge_count < asym]
            es = [h.edge_count for h in hits]
            c(not low and not high,
              f"n={n}: {len(hits)} hits, e in [{min(es)}, {max(es)}] vs [{b.edge_lower}, {b.edge_upper}]")
            c(not under, f"n={n}: asymptotic floor {asym}, {len(under)} hits below")
            for h in sorted(set(low) | set(under), key=write_graph6):
                iso = sum(1 for d in h.degrees() if d == 0)
                c.note(f"n={n} below floor: {write_graph6(h)} e={h.edge_count} "
                       f"degrees={sorted(h.degrees())} isolated={iso}")
            rest = [h for h in hits if 0 not in h.degrees()]
            if len(rest) != len(hits):
                ok = all(h.edge_count >= b.edge_lower for h in rest)
                c.note(f"n={n}: hits without isolated vertices all meet 2n-5: {ok}")

    def structural(self, c: _Checks) -> None:
        for n, hits in self._catalog_hits().items():
            g3 = [h for h in hits if girth(h) != 3]
            bip = [h for h in hits if is_bipartite(h).bipartite]
            full = [h for h in hits if sum(1 for d in h.degrees() if d == n - 1) > 1]
            near = [h for h in hits if sum(1 for d in h.degrees() if d == n - 2) > n // 2]
            c(not g3, f"n={n}: girth 3 for all {len(hits)} hits")
            c(not bip, f"n={n}: no bipartite hit")
            c(not full, f"n={n}: at most one vertex of degree n-1")
            c(not near, f"n={n}: at most {n // 2} vertices of degree n-2")

    # 9
    def formulas(self, c: _Checks) -> None:
        c(g_lower_bound(5) == Fraction(1024, 120), f"g_lower_bound(5) = {g_lower_bound(5)}")
        c(g_exact(5) == 34, f"g_exact(5) = {g_exact(5)}")
        b = edge_bounds(6)
        c((b.edge_lower, b.edge_upper) == (7, 11), f"edge_bounds(6) = ({b.edge_lower}, {b.edge_upper})")
        f277, f278 = link_distinctness_edge_floor(277), link_distinctness_edge_floor(278)
        c(f277 <= 3 * 277 - 6, f"n=277: floor {f277} <= {3 * 277 - 6}")
        c(f278 > 3 * 278 - 6, f"n=278: floor {f278} > {3 * 278 - 6}")
        c(planar_crossover() == 278, f"first n with floor above 3n-6: {planar_crossover()}")

    # 10
    def properties(self, c: _Checks) -> None:
        rng = random.Random(self.seed)
        fails = 0
        for _ in range(1000):
            g = random_graph(rng, rng.randint(1, 12))
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            cg, ch = canonical_form(g), canonical_form(h)
            try:
                check_canonical_form(g, cg)
                check_canonical_form(h, ch)
            except AssertionError:
                fails += 1
                continue
            fails += cg.code != ch.code
        c(fails == 0, f"relabeling invariance: {fails} failures in 1000 trials (n <= 12)")

        mism = pairs = 0
        for n in range(1, 7):
            graphs = list(enumerate_graphs(n))
            shuffled = []
            for g in graphs:
                perm = list(range(n))
                rng.shuffle(perm)
                shuffled.append(g.relabel(perm))
            for i, g in enumerate(graphs):
                for h in shuffled[i:]:
                    pairs += 1
                    mism += are_isomorphic(g, h) != brute_force_isomorphic(g, h)
        c(mism == 0, f"are_isomorphic vs brute force: {mism} disagreements over {pairs} pairs (n <= 6)")

        for n in range(0, 8):
            want = count_labeled_classes(n)
            got = len(catalog_codes(n))
            c(got == want, f"n={n}: catalog {got} vs labeled oracle {want}")

        bad = 0
        for n in range(0, 7):
            for code in catalog_codes(n):
                s = write_graph6(decode(n, code))
                bad += write_graph6(parse_graph6(s)) != s
        for _ in range(1000):
            g = random_graph(rng, rng.choice([rng.randint(0, 20), rng.randint(60, 64)]))
            bad += parse_graph6(write_graph6(g)) != g
        c(bad == 0, f"graph6 round trips: {bad} failures")


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return build(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    anchor: str
    budget_s: float
    run: Callable


CRITERIA = (
    Criterion(1, "catalog counts n=1..6", "class counts 1, 2, 4, 11, 34, 156", 10,
              lambda b, c: b.catalog_counts(c)),
    Criterion(2, "small orders", "theorem: link-irregular graphs exist iff n >= 6; |D(G)| = n-2 at n = 7", 60,
              lambda b, c: b.small_orders(c)),
    Criterion(3, "no regular examples for 6 <= n <= 9", "theorem: no regular link-irregular graph on n <= 9", 600,
              lambda b, c: b.no_small_regular(c)),
    Criterion(4, "7-regular counterexample on 12 vertices", "counterexample edge set and link degree table", 1,
              lambda b, c: b.counterexample(c)),
    Criterion(5, "complement-route search n=12 r=7", "theorem: a 7-regular link-irregular graph on 12 vertices exists", 1800,
              lambda b, c: b.counterexample_search(c, 1800)),
    Criterion(6, "planarity suite", "planar regular examples are not link-irregular", 30,
              lambda b, c: b.planarity_suite(c)),
    Criterion(7, "edge-bound sweep n=6,7,8", "theorems: 2n-5 <= e <= (2n^2-5n+4)/4 and the packing floor", 300,
              lambda b, c: b.edge_bound_sweep(c)),
    Criterion(8, "structural theorems on all hits", "girth 3, non-bipartite, degree n-1 and n-2 counts", 300,
              lambda b, c: b.structural(c)),
    Criterion(9, "formula spot checks", "g(r) bound, edge bounds, nonplanarity onset at n = 278", 1,
              lambda b, c: b.formulas(c)),
    Criterion(10, "property suites", "canonical form, isomorphism, enumeration and graph6 oracles", 600,
              lambda b, c: b.properties(c)),
)


def run_criterion(crit: Criterion, battery: Battery) -> CriterionResult:
    checks = _Checks()
    t0 = time.perf_counter()
    try:
        crit.run(battery, checks)
    except Exception as exc:  # a crash is a failure, with its reason
        checks(False, f"raised {type(exc).__name__}: {exc}")
    spent = time.perf_counter() - t0
    within = spent <= crit.budget_s
    if not within:
        checks.lines.append(f"FAIL runtime {spent:.2f}s over budget {crit.budget_s:g}s")
    return CriterionResult(crit.number, crit.title, crit.anchor, checks.ok and within,
                           checks.lines, spent, crit.budget_s)


def run_all(select: list[int] | None = None, workers: int = 1,
            battery: Battery | None = None) -> list[CriterionResult]:
    battery = battery or Battery(workers)
    return [run_criterion(c, battery) for c in CRITERIA if select is None or c.number in select]
