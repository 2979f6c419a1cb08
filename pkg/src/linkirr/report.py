"""Reports with a text and a structured (JSON) rendering of the same facts."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .bounds import edge_bounds
from .formats import write_graph6
from .graph import Graph, degree_summary, girth, is_bipartite, regularity
from .isomorphism import canonical_form, graph6_of_code
from .links import format_degree_table, is_link_irregular, link_degree_table, verdict_explain
from .planarity import is_planar, is_triangulation

FORMATS = ("text", "structured")


def _jsonable(value: Any) -> Any:
    if isinstance(value, float) and value == float("inf"):
        return "inf"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _text_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_text_value(v) for v in value) + "]"
    return str(value)


@dataclass
class Report:
    """Ordered sections of ``(key, value)`` facts about one subject."""

    kind: str
    subject: dict[str, Any]
    sections: list[tuple[str, list[tuple[str, Any]]]] = field(default_factory=list)

    def add(self, title: str, *facts: tuple[str, Any]) -> None:
        self.sections.append((title, list(facts)))

    def to_text(self) -> str:
        lines = [f"{self.kind}: " + " ".join(f"{k}={_text_value(v)}" for k, v in self.subject.items())]
        for title, facts in self.sections:
            lines.append(f"[{title}]")
            for key, value in facts:
                if isinstance(value, str) and "\n" in value:
                    lines.append(f"  {key}:")
                    lines.extend("    " + ln for ln in value.splitlines())
                else:
                    lines.append(f"  {key}: {_text_value(value)}")
        return "\n".join(lines) + "\n"

    def to_structured(self) -> str:
        doc = {
            "kind": self.kind,
            "subject": _jsonable(self.subject),
            "sections": [
                {"title": t, "facts": [[k, _jsonable(v)] for k, v in facts]}
                for t, facts in self.sections
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def render(self, fmt: str = "text") -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "structured":
            return self.to_structured()
        raise ValueError(f"unknown format {fmt!r}")


def graph_report(g: Graph, source: str) -> Report:
    """Everything the toolkit knows about one graph."""
    cf = canonical_form(g)
    rep = Report("graph", {
        "source": source,
        "n": g.n,
        "e": g.edge_count,
        "canonical_code": format(cf.code, "x"),
        "canonical_graph6": graph6_of_code(g.n, cf.code),
    })
    ds = degree_summary(g)
    rep.add("degrees",
            ("multiset", list(ds.multiset)),
            ("distinct", len(ds.distinct)),
            ("regular", regularity(g) if regularity(g) is not None else "no"))
    rep.add("girth", ("girth", girth(g)))
    bip = is_bipartite(g)
    rep.add("bipartite", ("bipartite", bip.bipartite),
            ("odd_cycle", list(bip.odd_cycle) if bip.odd_cycle else []))
    rep.add("links", ("table", format_degree_table(link_degree_table(g))))
    verdict = is_link_irregular(g)
    facts = [("link_irregular", verdict.irregular)]
    if verdict.irregular:
        facts.append(("distinct_link_codes", len(set(verdict.link_codes))))
    else:
        w = verdict.witness
        facts.append(("witness", [w.u, w.v]))
    facts.append(("explanation", verdict_explain(g, verdict)))
    rep.add("verdict", *facts)
    rep.add("planarity", *planarity_facts(g))
    if g.n >= 1:
        b = edge_bounds(g.n)
        rep.add("bounds",
                ("edge_lower", b.edge_lower),
                ("edge_upper", b.edge_upper),
                ("asym_lower", b.asym_lower),
                ("within", b.edge_lower <= g.edge_count <= b.edge_upper),
                ("notes", list(b.notes)))
    return rep


def planarity_facts(g: Graph) -> list[tuple[str, Any]]:
    res = is_planar(g)
    facts: list[tuple[str, Any]] = [("planar", res.planar)]
    if res.planar:
        facts.append(("faces", len(res.faces)))
        if g.n >= 3:
            facts.append(("triangulation", is_triangulation(g)))
        facts.append(("rotation", "\n".join(
            f"{v}: {' '.join(map(str, r))}" for v, r in enumerate(res.embedding))))
    else:
        obs = res.obstruction
        facts.append(("obstruction", obs.kind))
        facts.append(("branch", list(obs.branch)))
        if obs.sides:
            facts.append(("sides", [list(obs.sides[0]), list(obs.sides[1])]))
        facts.append(("paths", "\n".join(" ".join(map(str, p)) for p in obs.paths)))
    return facts


def subject_of(g: Graph, source: str) -> dict[str, Any]:
    return {"source": source, "n": g.n, "e": g.edge_count, "graph6": write_graph6(g)}
