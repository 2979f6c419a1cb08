"""Command line interface: ``linkirr <subcommand> ...``.

Exit status is 0 on a positive answer, 1 on a negative one (``check``: not
link-irregular; ``planar``: nonplanar; ``verify-paper``: a criterion failed)
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import kernels
from .bounds import edge_bounds, g_exact, g_lower_bound, moment_estimates
from .datasets import BUILTIN_NAMES, UnknownBuiltinError, builtin
from .enumeration import (
    ENUMERATION_LIMIT,
    GenSpec,
    enumerate_graphs,
    enumerate_regular,
    feasible_degrees,
    search_link_irregular,
)
from .formats import parse_edge_list, read_graph6_lines, write_graph6
from .graph import Graph, GraphError, induced_subgraph, make_named
from .links import format_degree_table, is_link_irregular, link_degree_table
from .report import FORMATS, Report, graph_report, planarity_facts, subject_of

log = logging.getLogger("linkirr")


class InputError(Exception):
    pass


def load_graph(source: str, base: int = 0, input_format: str = "auto") -> Graph:
    """``builtin:NAME``, a graph6 file, or an edge-list file (``-`` for stdin)."""
    if source.startswith("builtin:"):
        try:
            return builtin(source)
        except UnknownBuiltinError as exc:
            try:
                return make_named(source.removeprefix("builtin:"))
            except GraphError:
                raise InputError(exc.args[0]) from None
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    fmt = input_format
    if fmt == "auto":
        fmt = "graph6" if _looks_like_graph6(source, text) else "edges"
    try:
        if fmt == "graph6":
            graphs = read_graph6_lines(text)
            if len(graphs) != 1:
                raise InputError(f"{source}: expected one graph6 line, found {len(graphs)}")
            return graphs[0]
        return parse_edge_list(text, base)
    except (GraphError, ValueError) as exc:
        raise InputError(f"{source}: {exc}") from None


def _looks_like_graph6(source: str, text: str) -> bool:
    if source.endswith(".g6"):
        return True
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        return False
    first = lines[0].removeprefix(">>graph6<<")
    return all(63 <= ord(ch) <= 126 for ch in first) and not any(ch.isdigit() for ch in first)


def _emit(text: str) -> None:
    sys.stdout.write(text)


# --- subcommands ------------------------------------------------------------

def cmd_check(args) -> int:
    g = load_graph(args.source, args.base, args.input_format)
    rep = graph_report(g, args.source)
    _emit(rep.render(args.format))
    return 0 if is_link_irregular(g).irregular else 1


def cmd_links(args) -> int:
    g = load_graph(args.source, args.base, args.input_format)
    if args.vertex is None:
        _emit(format_degree_table(link_degree_table(g)) + "\n")
        return 0
    if not 0 <= args.vertex < g.n:
        raise InputError(f"vertex {args.vertex} out of range 0..{g.n - 1}")
    _emit(write_graph6(induced_subgraph(g, g.neighbors(args.vertex))) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    if args.r is None:
        stream = enumerate_graphs(args.n, args.connected)
    else:
        stream = enumerate_regular(args.n, args.r, args.connected)
    count = 0
    for g in stream:
        sys.stdout.write(write_graph6(g) + "\n")
        count += 1
    spec = GenSpec(args.n, args.r, args.connected)
    print(f"{count} graphs ({spec.describe()})", file=sys.stderr)
    return 0


def cmd_search(args) -> int:
    if args.all_r and args.r is not None:
        raise InputError("--all-r and --r are exclusive")
    if args.all_r:
        degrees = feasible_degrees(args.n)
    else:
        degrees = [args.r]
    rep = Report("search", {"n": args.n, "backend": kernels.BACKEND})
    for r in degrees:
        spec = GenSpec(args.n, r, args.connected)
        ck = args.checkpoint
        if ck is not None and args.all_r:
            ck = f"{ck}.r{r}"
        res = search_link_irregular(spec, args.workers, ck)
        rep.add(spec.describe(),
                ("summary", f"{res.hit_count} hit{'s' if res.hit_count != 1 else ''} / {res.examined} examined"),
                ("route", res.route),
                ("hits", [write_graph6(h) for h in res.hits]),
                ("roots", res.wall_stats["roots"]),
                ("resumed_roots", res.wall_stats["resumed_roots"]))
        log.info("%s: %s", spec.describe(), res.wall_stats)
    _emit(rep.render(args.format))
    return 0


def cmd_planar(args) -> int:
    g = load_graph(args.source, args.base, args.input_format)
    rep = Report("planarity", subject_of(g, args.source))
    facts = planarity_facts(g)
    rep.add("planarity", *facts)
    _emit(rep.render(args.format))
    return 0 if facts[0][1] else 1


def cmd_bounds(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    b = edge_bounds(args.n)
    rep = Report("bounds", {"n": args.n})
    rep.add("edges",
            ("edge_lower", b.edge_lower),
            ("edge_upper", b.edge_upper),
            ("asym_lower", b.asym_lower),
            ("planar_possible", b.planar_possible),
            ("notes", list(b.notes)))
    if args.r is not None:
        if args.r < 0:
            raise InputError("--r must be non-negative")
        lower = g_lower_bound(args.r)
        if args.r <= ENUMERATION_LIMIT:
            g, source = g_exact(args.r), "exact"
        else:
            g, source = -(-lower.numerator // lower.denominator), "lower bound"
        m = moment_estimates(args.n, g)
        rep.add("moments",
                ("r", args.r),
                ("g_lower_bound", str(lower)),
                ("g", g),
                ("g_source", source),
                ("expected_unique", repr(m.expected_unique)),
                ("variance_ratio", repr(m.variance_ratio)))
    _emit(rep.render(args.format))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_all

    results = run_all(args.only, args.workers)
    rep = Report("verify", {"criteria": len(results), "backend": kernels.BACKEND})
    for r in results:
        rep.add(f"{r.number}", ("status", r.status), ("title", r.title), ("anchor", r.anchor),
                ("seconds", round(r.seconds, 2)), ("budget_s", r.budget_s),
                ("detail", "\n".join(r.detail)))
    if args.format == "text":
        for r in results:
            print(r.line())
            if args.verbose or not r.passed:
                for d in r.detail:
                    print(f"      {d}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} criteria passed")
    else:
        _emit(rep.render(args.format))
    return 0 if all(r.passed for r in results) else 1


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linkirr", description="Link-irregular graph toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def source_args(sp):
        sp.add_argument("source", help=f"builtin:NAME ({', '.join(BUILTIN_NAMES)}, or K5, C6, K3,3, Q4 ...), graph6 file or edge-list file")
        sp.add_argument("--base", type=int, choices=(0, 1), default=0, help="edge-list vertex indexing")
        sp.add_argument("--input-format", choices=("auto", "graph6", "edges"), default="auto")

    def fmt_arg(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")

    sp = sub.add_parser("check", help="full report and link-irregularity verdict")
    source_args(sp)
    fmt_arg(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("links", help="link degree table, or one link as graph6")
    source_args(sp)
    sp.add_argument("--vertex", type=int)
    sp.set_defaults(func=cmd_links)

    sp = sub.add_parser("enumerate", help="stream isomorphism classes as graph6")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--connected", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("search", help="search a catalog for link-irregular graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int)
    sp.add_argument("--all-r", action="store_true", help="every parity-feasible degree")
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--checkpoint", help="append progress here and resume from it")
    sp.add_argument("--workers", type=int, default=1)
    fmt_arg(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("planar", help="planarity with certificate")
    source_args(sp)
    fmt_arg(sp)
    sp.set_defaults(func=cmd_planar)

    sp = sub.add_parser("bounds", help="edge bounds and moment estimates")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int)
    fmt_arg(sp)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("verify-paper", help="run the acceptance battery")
    sp.add_argument("--only", type=int, nargs="+", metavar="K", help="run only these criteria")
    sp.add_argument("--workers", type=int, default=1)
    fmt_arg(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, GraphError, ValueError) as exc:
        print(f"linkirr: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
