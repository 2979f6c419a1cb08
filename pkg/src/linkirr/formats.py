"""graph6 and plain edge-list readers/writers."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, GraphError, build

GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


class Graph6HeaderError(Graph6Error):
    """Order prefix missing, truncated or not in shortest form."""


class Graph6LengthError(Graph6Error):
    """Adjacency byte count does not match the order."""


class Graph6PaddingError(Graph6Error):
    """Unused bits in the last byte are not zero."""


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_order(s: str) -> tuple[int, int]:
    if not s:
        raise Graph6HeaderError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise Graph6HeaderError("truncated 8-byte order")
        n = 0
        for ch in s[2:8]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 258048:
            raise Graph6HeaderError("order not in shortest form")
        return n, 8
    if len(s) < 4:
        raise Graph6HeaderError("truncated 4-byte order")
    n = 0
    for ch in s[1:4]:
        n = (n << 6) | (ord(ch) - 63)
    if n < 63:
        raise Graph6HeaderError("order not in shortest form")
    return n, 4


def write_graph6(g: Graph) -> str:
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        r = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((r >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise Graph6HeaderError("character outside the graph6 range 63..126")
    n, k = _decode_order(s)
    body = s[k:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6LengthError(
            f"order {n} needs {(nbits + 5) // 6} adjacency bytes, got {len(body)}"
        )
    edges = []
    pos = 0
    vals = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            if (vals[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    pad = len(body) * 6 - nbits
    if pad and vals[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    return build(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


@dataclass(frozen=True)
class EdgeListDoc:
    base: int
    pairs: tuple[tuple[int, int], ...]
    n_hint: int | None = None

    @property
    def order(self) -> int:
        if self.n_hint is not None:
            return self.n_hint
        return max((max(p) for p in self.pairs), default=self.base - 1) - self.base + 1

    def to_graph(self) -> Graph:
        return build(self.order, ((u - self.base, v - self.base) for u, v in self.pairs))


_ORDER_LINE = re.compile(r"^\s*(?:n|order)\s*[=:]\s*(\d+)\s*$", re.IGNORECASE)
_INT = re.compile(r"-?\d+")


def parse_edge_list_doc(doc: str, base: int = 0) -> EdgeListDoc:
    """Read pairs from free-form text.

    Any mix of whitespace, commas, parentheses and braces separates the
    integers; ``#`` starts a comment; a line ``n=<order>`` fixes the order.
    """
    if base not in (0, 1):
        raise GraphError("base must be 0 or 1")
    n_hint = None
    nums: list[int] = []
    for raw in doc.splitlines():
        text = raw.split("#", 1)[0]
        m = _ORDER_LINE.match(text)
        if m:
            n_hint = int(m.group(1))
            continue
        nums.extend(int(x) for x in _INT.findall(text))
    if len(nums) % 2:
        raise GraphError("odd number of vertex indices")
    for x in nums:
        if x < 0:
            raise GraphError(f"negative vertex index {x}")
        if x < base:
            raise GraphError(f"vertex index {x} below base {base}")
    pairs = tuple(zip(nums[::2], nums[1::2]))
    return EdgeListDoc(base, pairs, n_hint)


def parse_edge_list(doc: str, base: int = 0) -> Graph:
    return parse_edge_list_doc(doc, base).to_graph()


def write_edge_list(g: Graph, base: int = 0) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u + base} {v + base}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
