"""Pure-Python hot kernels.

This module is the reference twin of ``_ckernels.pyx``.  Both must make the
same choices in the same order so that canonical codes *and* canonical
relabelings agree bit for bit; ``tests/test_kernels.py`` cross-checks them.

Graphs enter as ``(n, rows)`` where ``rows[v]`` is the neighbour bitmask of
vertex ``v``.  A canonical code is the row-major upper triangle of the
relabeled adjacency matrix read as one integer, pair ``(0, 1)`` most
significant; the canonical labeling is the one minimising it.
"""

from __future__ import annotations

from itertools import combinations

MAXN = 64
MAX_GENERATORS = 256
_NO_ABORT = 1 << 30


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _refine(n, rows, lab, cend, queue):
    inq = [False] * n
    for s in queue:
        inq[s] = True
    head = 0
    while head < len(queue):
        s = queue[head]
        head += 1
        inq[s] = False
        w = 0
        for p in range(s, cend[s]):
            w |= 1 << lab[p]
        t = 0
        while t < n:
            e = cend[t]
            if e - t > 1:
                counts = [_popcount(rows[lab[p]] & w) for p in range(t, e)]
                if min(counts) != max(counts):
                    order = sorted(range(e - t), key=counts.__getitem__)
                    verts = [lab[t + i] for i in order]
                    cs = [counts[i] for i in order]
                    lab[t:e] = verts
                    p = t
                    while p < e:
                        q = p
                        c = cs[p - t]
                        while q < e and cs[q - t] == c:
                            q += 1
                        cend[p] = q
                        if p != t and not inq[p]:
                            queue.append(p)
                            inq[p] = True
                        p = q
            t = e


def _leaf_rows(n, rows, lab):
    out = []
    for i in range(n - 1):
        r = rows[lab[i]]
        x = 0
        for j in range(i + 1, n):
            if (r >> lab[j]) & 1:
                x |= 1 << (n - 1 - j)
        out.append(x)
    return out


class _Search:
    __slots__ = ("n", "rows", "path", "first", "first_lab", "first_path",
                 "best", "best_lab", "best_path", "gens")

    def __init__(self, n, rows):
        self.n = n
        self.rows = rows
        self.path = [0] * n
        self.first = None
        self.first_lab = self.first_path = None
        self.best = self.best_lab = self.best_path = None
        self.gens = []

    def _in_orbit(self, v, explored, level):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        prefix = self.path[:level]
        for g in self.gens:
            if any(g[x] != x for x in prefix):
                continue
            for x in range(self.n):
                a, b = find(x), find(g[x])
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
        rv = find(v)
        return any(find(x) == rv for x in explored)

    def _automorphism(self, other_lab, lab):
        if len(self.gens) >= MAX_GENERATORS:
            return
        g = [0] * self.n
        for i in range(self.n):
            g[other_lab[i]] = lab[i]
        self.gens.append(g)

    def _leaf(self, level, lab):
        code = _leaf_rows(self.n, self.rows, lab)
        path = self.path[:level]
        if self.first is None:
            self.first = self.best = code
            self.first_lab = self.best_lab = lab[:]
            self.first_path = self.best_path = path
            return _NO_ABORT
        if code == self.first:
            self._automorphism(self.first_lab, lab)
            return _divergence(path, self.first_path)
        if code < self.best:
            self.best = code
            self.best_lab = lab[:]
            self.best_path = path
            return _NO_ABORT
        if code == self.best:
            self._automorphism(self.best_lab, lab)
            return _divergence(path, self.best_path)
        return _NO_ABORT

    def visit(self, level, lab, cend):
        n = self.n
        t = 0
        while t < n and cend[t] - t == 1:
            t += 1
        if t >= n:
            return self._leaf(level, lab)
        s = t
        e = cend[s]
        cell = sorted(lab[s:e])
        explored = []
        for v in cell:
            if explored and self._in_orbit(v, explored, level):
                continue
            lab2 = lab[:]
            cend2 = cend[:]
            p = lab2.index(v, s, e)
            lab2[s], lab2[p] = lab2[p], lab2[s]
            cend2[s] = s + 1
            cend2[s + 1] = e
            _refine(n, self.rows, lab2, cend2, [s])
            self.path[level] = v
            ret = self.visit(level + 1, lab2, cend2)
            explored.append(v)
            if ret < level:
                return ret
        return _NO_ABORT


def _divergence(a, b):
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    return min(len(a), len(b))


def _pack(n, leaf):
    code = 0
    for i, x in enumerate(leaf):
        code = (code << (n - 1 - i)) | x
    return code


def canon(n, rows):
    """Return ``(code, perm)``; ``perm[v]`` is the canonical label of ``v``."""
    if n <= 1:
        return 0, tuple(range(n))
    rows = list(rows)
    lab = list(range(n))
    cend = [0] * n
    cend[0] = n
    _refine(n, rows, lab, cend, [0])
    st = _Search(n, rows)
    st.visit(0, lab, cend)
    perm = [0] * n
    for i, v in enumerate(st.best_lab):
        perm[v] = i
    return _pack(n, st.best), tuple(perm)


def canon_code(n, rows):
    return canon(n, rows)[0]


def rows_from_code(n, code):
    rows = [0] * n
    shift = n * (n - 1) // 2
    for i in range(n - 1):
        for j in range(i + 1, n):
            shift -= 1
            if (code >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def extend_children(n, rows, parent_code):
    """Codes of the (n+1)-vertex graphs owned by this n-vertex parent.

    A child is owned when deleting its canonically-last vertex gives back the
    parent's class, so every class has exactly one owner across the catalog.
    ``rows`` must be a graph whose canonical code is ``parent_code``.
    """
    m = n + 1
    seen = {}
    for s in range(1 << n):
        child = [rows[i] | (((s >> i) & 1) << n) for i in range(n)]
        child.append(s)
        code, perm = canon(m, child)
        if code in seen:
            continue
        last = perm.index(m - 1)
        if last == n:
            ok = True
        else:
            keep = [v for v in range(m) if v != last]
            sub = []
            for v in keep:
                r = child[v]
                x = 0
                for k, u in enumerate(keep):
                    if (r >> u) & 1:
                        x |= 1 << k
                sub.append(x)
            ok = canon_code(n, sub) == parent_code
        seen[code] = ok
    return sorted(c for c, ok in seen.items() if ok)


def graphical_sequence(degs):
    """Erdos-Gallai test on a degree sequence."""
    d = sorted((x for x in degs if x > 0), reverse=True)
    total = sum(d)
    if total & 1:
        return False
    m = len(d)
    left = 0
    for k in range(1, m + 1):
        left += d[k - 1]
        right = k * (k - 1)
        for i in range(k, m):
            right += d[i] if d[i] < k else k
        if left > right:
            return False
    return True


def regular_children(n, r, rows):
    """Codes of the states reached by saturating one vertex of a partial
    r-regular graph.  Empty when the state is already complete."""
    deg = [_popcount(rows[v]) for v in range(n)]
    unsat = [v for v in range(n) if deg[v] < r]
    if not unsat:
        return []
    v = unsat[0]
    for u in unsat:
        if deg[u] > deg[v]:
            v = u
    need = r - deg[v]
    cands = [u for u in unsat if u != v]
    out = set()
    for chosen in combinations(cands, need):
        deficits = [r - deg[u] for u in cands]
        for u in chosen:
            deficits[cands.index(u)] -= 1
        if not graphical_sequence(deficits):
            continue
        child = list(rows)
        for u in chosen:
            child[u] |= 1 << v
            child[v] |= 1 << u
        out.add(canon_code(n, child))
    return sorted(out)


def count_labeled_classes(n):
    """Canonicalise every labeled graph on ``n`` vertices; count codes."""
    if n <= 1:
        return 1
    if n > 8:
        raise ValueError("labeled sweep limited to n <= 8")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    codes = set()
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        codes.add(canon_code(n, rows))
    return len(codes)
