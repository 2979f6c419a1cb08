"""Planarity testing with certificates.

Each biconnected block is embedded by path addition (Demoucron, Malgrange
and Pertuiset): start from a cycle, then repeatedly pick a fragment of the
unembedded part, find the faces that contain all of its attachment
vertices, and route one path of the fragment through such a face.  A
fragment with no admissible face proves the block nonplanar.

A planar answer carries a rotation system whose traced faces satisfy
Euler's formula on every component.  A nonplanar answer carries a
Kuratowski subdivision obtained by deleting edges while the graph stays
nonplanar; both certificates can be checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, build, is_connected


@dataclass(frozen=True)
class Obstruction:
    """A subdivision of K5 or K3,3 inside a graph.

    ``paths`` join pairs of branch vertices; for K3,3 ``sides`` gives the
    bipartition of the branch vertices.
    """

    kind: str
    branch: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    sides: tuple[tuple[int, ...], tuple[int, ...]] | None = None


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: tuple[tuple[int, ...], ...] | None = None
    faces: tuple[tuple[int, ...], ...] | None = None
    obstruction: Obstruction | None = None

    def __bool__(self) -> bool:
        return self.planar


class _Nonplanar(Exception):
    pass


# --- blocks ----------------------------------------------------------------

def _blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected blocks (Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    stack: list[tuple[int, int]] = []
    out: list[list[tuple[int, int]]] = []
    clock = 0

    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # explicit DFS: (vertex, parent, remaining neighbours)
        work = [(root, -1, iter(g.neighbors(root)))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    work.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == (parent, v):
                            break
                    out.append(block)
    return out


# --- path addition ---------------------------------------------------------

def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    onstack = {start: 0}
    path = [start]
    iters = [iter(sorted(adj[start]))]
    while iters:
        v = path[-1]
        for w in iters[-1]:
            if w == parent[v]:
                continue
            if w in onstack:
                return path[onstack[w]:]
            if w in parent:
                continue
            parent[w] = v
            onstack[w] = len(path)
            path.append(w)
            iters.append(iter(sorted(adj[w])))
            break
        else:
            iters.pop()
            del onstack[path.pop()]
    raise ValueError("block has no cycle")


def _fragments(adj, placed: set[int], placed_edges: set[frozenset]):
    """Fragments as (attachments, path) pairs; the path joins two attachments."""
    frags = []
    for u in sorted(placed):
        for w in sorted(adj[u]):
            if w in placed and u < w and frozenset((u, w)) not in placed_edges:
                frags.append(({u, w}, [u, w]))
    seen: set[int] = set()
    for s in sorted(adj):
        if s in placed or s in seen:
            continue
        comp = {s}
        todo = [s]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in placed and y not in comp:
                    comp.add(y)
                    todo.append(y)
        seen |= comp
        att = {y for x in comp for y in adj[x] if y in placed}
        frags.append((att, comp))
    return frags


def _route(adj, att: set[int], comp: set[int]) -> list[int]:
    a = min(att)
    prev: dict[int, int] = {}
    queue = []
    for x in sorted(adj[a]):
        if x in comp:
            prev[x] = a
            queue.append(x)
    for x in queue:
        for y in sorted(adj[x]):
            if y in att and y != a:
                walk = [y, x]
                while walk[-1] != a:
                    walk.append(prev[walk[-1]])
                return walk[::-1]
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("fragment of a biconnected block has one attachment")


def _embed_block(edges: list[tuple[int, int]]) -> list[list[int]]:
    """Oriented faces of a planar embedding of one block, or raise _Nonplanar."""
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if len(edges) == 1:
        (u, v), = edges
        return [[u, v]]
    cyc = _find_cycle(adj)
    faces = [cyc, cyc[::-1]]
    placed = set(cyc)
    placed_edges = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
    while len(placed_edges) < len(edges):
        choice = None
        for att, body in _fragments(adj, placed, placed_edges):
            ok = [i for i, f in enumerate(faces) if att <= set(f)]
            if not ok:
                raise _Nonplanar
            if choice is None or len(ok) == 1:
                choice = (att, body, ok[0])
                if len(ok) == 1:
                    break
        att, body, fi = choice
        p = body if isinstance(body, list) else _route(adj, att, body)
        face = faces[fi]
        i, j = face.index(p[0]), face.index(p[-1])
        if i <= j:
            ab, ba = face[i:j + 1], face[j:] + face[:i + 1]
        else:
            ab, ba = face[i:] + face[:j + 1], face[j:i + 1]
        inner = p[1:-1]
        faces[fi] = ab + inner[::-1]
        faces.append(ba + inner)
        placed.update(inner)
        placed_edges.update(frozenset((p[k], p[k + 1])) for k in range(len(p) - 1))
    return faces


def _rotation_from_faces(n: int, block_faces: list[list[list[int]]]) -> tuple[tuple[int, ...], ...]:
    rot: list[list[int]] = [[] for _ in range(n)]
    for faces in block_faces:
        succ: dict[int, dict[int, int]] = {}
        for f in faces:
            k = len(f)
            for idx in range(k):
                u, v, w = f[idx - 1], f[idx], f[(idx + 1) % k]
                succ.setdefault(v, {})[u] = w
        for v, m in succ.items():
            start = min(m)
            cyc = [start]
            x = m[start]
            while x != start:
                cyc.append(x)
                x = m[x]
            rot[v].extend(cyc)
    return tuple(tuple(r) for r in rot)


def trace_faces(g: Graph, rotation) -> list[tuple[int, ...]]:
    """Faces of a rotation system: dart (u, v) is followed by (v, next_v(u))."""
    nxt = []
    for v in range(g.n):
        r = rotation[v]
        nxt.append({r[i]: r[(i + 1) % len(r)] for i in range(len(r))})
    seen: set[tuple[int, int]] = set()
    faces = []
    for u, v in sorted(g.edges()):
        for dart in ((u, v), (v, u)):
            if dart in seen:
                continue
            face = []
            a, b = dart
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                a, b = b, nxt[b][a]
            faces.append(tuple(face))
    return faces


def check_embedding(g: Graph, rotation) -> bool:
    """Rotation lists match neighbourhoods and Euler's formula holds per component."""
    if rotation is None or len(rotation) != g.n:
        return False
    for v in range(g.n):
        if sorted(rotation[v]) != g.neighbors(v) or len(set(rotation[v])) != len(rotation[v]):
            return False
    faces = trace_faces(g, rotation)
    comp = _components(g)
    nv: dict[int, int] = {}
    ne: dict[int, int] = {}
    nf: dict[int, int] = {}
    for v in range(g.n):
        nv[comp[v]] = nv.get(comp[v], 0) + 1
    for u, _ in g.edges():
        ne[comp[u]] = ne.get(comp[u], 0) + 1
    for f in faces:
        nf[comp[f[0]]] = nf.get(comp[f[0]], 0) + 1
    for c in nv:
        faces_c = nf.get(c, 1)  # an isolated vertex has one face
        if nv[c] - ne.get(c, 0) + faces_c != 2:
            return False
    return True


def _components(g: Graph) -> list[int]:
    comp = [-1] * g.n
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = s
        todo = [s]
        while todo:
            x = todo.pop()
            for y in bits(g.rows[x]):
                if comp[y] < 0:
                    comp[y] = s
                    todo.append(y)
    return comp


def _embed(g: Graph):
    """Rotation system of a planar embedding, or None if nonplanar."""
    if g.n >= 3 and g.edge_count > 3 * g.n - 6:
        return None
    block_faces = []
    try:
        for block in _blocks(g):
            block_faces.append(_embed_block(block))
    except _Nonplanar:
        return None
    return _rotation_from_faces(g.n, block_faces)


# --- obstructions ----------------------------------------------------------

def _minimal_nonplanar(g: Graph) -> list[tuple[int, int]]:
    keep = list(g.edges())
    chunk = max(1, len(keep) // 2)
    while True:
        i = 0
        while i < len(keep):
            trial = keep[:i] + keep[i + chunk:]
            if _embed(build(g.n, trial)) is None:
                keep = trial
            else:
                i += chunk
        if chunk == 1:
            return keep
        chunk //= 2


def _obstruction_from(n: int, edges: list[tuple[int, int]]) -> Obstruction:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, ns in adj.items() if len(ns) >= 3)
    bset = set(branch)
    paths = []
    for b in branch:
        for first in sorted(adj[b]):
            walk = [b, first]
            while walk[-1] not in bset:
                a, c = adj[walk[-1]]
                walk.append(a if a != walk[-2] else c)
            if walk[0] < walk[-1] or (walk[0] == walk[-1]):
                paths.append(tuple(walk))
    paths.sort()
    if len(branch) == 5:
        return Obstruction("K5", tuple(branch), tuple(paths))
    if len(branch) != 6:
        raise AssertionError(f"minimal nonplanar subgraph has {len(branch)} branch vertices")
    colour = {branch[0]: 0}
    ends = [(p[0], p[-1]) for p in paths]
    changed = True
    while changed:
        changed = False
        for a, b in ends:
            if a in colour and b not in colour:
                colour[b] = 1 - colour[a]
                changed = True
            elif b in colour and a not in colour:
                colour[a] = 1 - colour[b]
                changed = True
    left = tuple(v for v in branch if colour.get(v) == 0)
    right = tuple(v for v in branch if colour.get(v) == 1)
    return Obstruction("K3,3", tuple(branch), tuple(paths), (left, right))


def verify_obstruction(g: Graph, obs: Obstruction) -> bool:
    """Check that ``obs`` is a K5 or K3,3 subdivision contained in ``g``."""
    branch = set(obs.branch)
    if obs.kind == "K5":
        if len(branch) != 5:
            return False
        want = {frozenset((a, b)) for a in branch for b in branch if a < b}
    elif obs.kind == "K3,3":
        if obs.sides is None or len(branch) != 6:
            return False
        left, right = map(set, obs.sides)
        if len(left) != 3 or len(right) != 3 or left | right != branch:
            return False
        want = {frozenset((a, b)) for a in left for b in right}
    else:
        return False
    got = set()
    interior: set[int] = set()
    for p in obs.paths:
        if len(p) < 2 or p[0] not in branch or p[-1] not in branch or p[0] == p[-1]:
            return False
        for x, y in zip(p, p[1:]):
            if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
                return False
        inner = p[1:-1]
        if branch & set(inner) or interior & set(inner) or len(set(inner)) != len(inner):
            return False
        interior |= set(inner)
        key = frozenset((p[0], p[-1]))
        if key in got:
            return False
        got.add(key)
    return got == want


# --- public ----------------------------------------------------------------

def is_planar(g: Graph) -> PlanarityResult:
    """Decide planarity.  Planar results carry a rotation system and its
    faces; nonplanar results carry a Kuratowski subdivision.  The result is
    truthy exactly when ``g`` is planar."""
    rot = _embed(g)
    if rot is not None:
        faces = tuple(trace_faces(g, rot))
        return PlanarityResult(True, rot, faces, None)
    return PlanarityResult(False, obstruction=_obstruction_from(g.n, _minimal_nonplanar(g)))


def planar_embedding_exists(g: Graph) -> bool:
    """Bare decision without building a certificate."""
    return _embed(g) is not None


def check_planarity_result(g: Graph, res: PlanarityResult) -> bool:
    if res.planar:
        return res.obstruction is None and check_embedding(g, res.embedding)
    return res.embedding is None and res.obstruction is not None and verify_obstruction(g, res.obstruction)


def planar_edge_bound_check(g: Graph) -> bool:
    """``e <= 3n - 6``, the necessary condition for planarity."""
    if g.n < 3:
        raise ValueError("edge bound needs at least 3 vertices")
    return g.edge_count <= 3 * g.n - 6


def is_triangulation(g: Graph) -> bool:
    """Maximal planar: planar, ``e = 3n - 6`` and every face a triangle.

    The face lengths are traced from the embedding rather than inferred from
    the edge count.
    """
    if g.n < 3:
        raise ValueError("triangulations need at least 3 vertices")
    if g.edge_count != 3 * g.n - 6 or not is_connected(g):
        return False
    rot = _embed(g)
    if rot is None:
        return False
    return all(len(f) == 3 for f in trace_faces(g, rot))
