# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels.  Mirrors ``_pykernels`` decision for decision."""

from libc.string cimport memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(u64 x) nogil

cdef enum:
    MAXN = 64
    MAXGEN = 256
    NO_ABORT = 1 << 30

MAX_GENERATORS = MAXGEN


cdef struct Search:
    int n
    u64 rows[MAXN]
    int path[MAXN]
    int have_first
    u64 first[MAXN]
    int first_lab[MAXN]
    int first_path[MAXN]
    int first_depth
    u64 best[MAXN]
    int best_lab[MAXN]
    int best_path[MAXN]
    int best_depth
    int ngens


# One search at a time: the kernels never release the GIL.
cdef Search _st
cdef int _gens[MAXGEN][MAXN]


cdef void refine(int n, u64* rows, int* lab, int* cend, int start) noexcept nogil:
    cdef int inq[MAXN]
    cdef int queue[MAXN]
    cdef int cnt[MAXN]
    cdef int verts[MAXN]
    cdef int head = 0, count = 1, tail = 1
    cdef int s, t, e, p, q, i, j, c, mn, mx, kv, kc
    cdef u64 w
    memset(inq, 0, sizeof(inq))
    queue[0] = start
    inq[start] = 1
    while count > 0:
        s = queue[head]
        head = (head + 1) & (MAXN - 1)
        count -= 1
        inq[s] = 0
        w = 0
        for p in range(s, cend[s]):
            w |= (<u64>1) << lab[p]
        t = 0
        while t < n:
            e = cend[t]
            if e - t > 1:
                mn = 1000
                mx = -1
                for i in range(e - t):
                    c = popcount(rows[lab[t + i]] & w)
                    cnt[i] = c
                    verts[i] = lab[t + i]
                    if c < mn:
                        mn = c
                    if c > mx:
                        mx = c
                if mn != mx:
                    # stable insertion sort on cnt
                    for i in range(1, e - t):
                        kc = cnt[i]
                        kv = verts[i]
                        j = i - 1
                        while j >= 0 and cnt[j] > kc:
                            cnt[j + 1] = cnt[j]
                            verts[j + 1] = verts[j]
                            j -= 1
                        cnt[j + 1] = kc
                        verts[j + 1] = kv
                    for i in range(e - t):
                        lab[t + i] = verts[i]
                    p = t
                    while p < e:
                        q = p
                        c = cnt[p - t]
                        while q < e and cnt[q - t] == c:
                            q += 1
                        cend[p] = q
                        if p != t and not inq[p]:
                            queue[tail] = p
                            tail = (tail + 1) & (MAXN - 1)
                            count += 1
                            inq[p] = 1
                        p = q
            t = e


cdef void leaf_rows(int n, u64* rows, int* lab, u64* out) noexcept nogil:
    cdef int i, j
    cdef u64 r, x
    for i in range(n - 1):
        r = rows[lab[i]]
        x = 0
        for j in range(i + 1, n):
            if (r >> lab[j]) & 1:
                x |= (<u64>1) << (n - 1 - j)
        out[i] = x


cdef int cmp_code(int n, u64* a, u64* b) noexcept nogil:
    cdef int i
    for i in range(n - 1):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef int divergence(int* a, int la, int* b, int lb) noexcept nogil:
    cdef int i, m = la if la < lb else lb
    for i in range(m):
        if a[i] != b[i]:
            return i
    return m


cdef int find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef int in_orbit(Search* st, int v, int* explored, int nexp, int level) noexcept nogil:
    cdef int parent[MAXN]
    cdef int n = st.n
    cdef int g, x, a, b, ok, rv
    for x in range(n):
        parent[x] = x
    for g in range(st.ngens):
        ok = 1
        for x in range(level):
            if _gens[g][st.path[x]] != st.path[x]:
                ok = 0
                break
        if not ok:
            continue
        for x in range(n):
            a = find(parent, x)
            b = find(parent, _gens[g][x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    rv = find(parent, v)
    for x in range(nexp):
        if find(parent, explored[x]) == rv:
            return 1
    return 0


cdef void automorphism(Search* st, int* other_lab, int* lab) noexcept nogil:
    cdef int i
    if st.ngens >= MAXGEN:
        return
    for i in range(st.n):
        _gens[st.ngens][other_lab[i]] = lab[i]
    st.ngens += 1


cdef int leaf(Search* st, int level, int* lab) noexcept nogil:
    cdef u64 code[MAXN]
    cdef int n = st.n
    cdef int c
    leaf_rows(n, st.rows, lab, code)
    if not st.have_first:
        st.have_first = 1
        memcpy(st.first, code, (n - 1) * sizeof(u64))
        memcpy(st.best, code, (n - 1) * sizeof(u64))
        memcpy(st.first_lab, lab, n * sizeof(int))
        memcpy(st.best_lab, lab, n * sizeof(int))
        memcpy(st.first_path, st.path, level * sizeof(int))
        memcpy(st.best_path, st.path, level * sizeof(int))
        st.first_depth = level
        st.best_depth = level
        return NO_ABORT
    if cmp_code(n, code, st.first) == 0:
        automorphism(st, st.first_lab, lab)
        return divergence(st.path, level, st.first_path, st.first_depth)
    c = cmp_code(n, code, st.best)
    if c < 0:
        memcpy(st.best, code, (n - 1) * sizeof(u64))
        memcpy(st.best_lab, lab, n * sizeof(int))
        memcpy(st.best_path, st.path, level * sizeof(int))
        st.best_depth = level
        return NO_ABORT
    if c == 0:
        automorphism(st, st.best_lab, lab)
        return divergence(st.path, level, st.best_path, st.best_depth)
    return NO_ABORT


cdef int visit(Search* st, int level, int* lab, int* cend) noexcept nogil:
    cdef int n = st.n
    cdef int lab2[MAXN]
    cdef int cend2[MAXN]
    cdef int cell[MAXN]
    cdef int explored[MAXN]
    cdef int nexp = 0
    cdef int t = 0, s, e, sz, i, j, v, p, tmp, ret
    while t < n and cend[t] - t == 1:
        t += 1
    if t >= n:
        return leaf(st, level, lab)
    s = t
    e = cend[s]
    sz = e - s
    for i in range(sz):
        cell[i] = lab[s + i]
    for i in range(1, sz):
        v = cell[i]
        j = i - 1
        while j >= 0 and cell[j] > v:
            cell[j + 1] = cell[j]
            j -= 1
        cell[j + 1] = v
    for i in range(sz):
        v = cell[i]
        if nexp > 0 and in_orbit(st, v, explored, nexp, level):
            continue
        memcpy(lab2, lab, n * sizeof(int))
        memcpy(cend2, cend, n * sizeof(int))
        p = s
        while lab2[p] != v:
            p += 1
        tmp = lab2[s]
        lab2[s] = lab2[p]
        lab2[p] = tmp
        cend2[s] = s + 1
        cend2[s + 1] = e
        refine(n, st.rows, lab2, cend2, s)
        st.path[level] = v
        ret = visit(st, level + 1, lab2, cend2)
        explored[nexp] = v
        nexp += 1
        if ret < level:
            return ret
    return NO_ABORT


cdef void canon_core(int n, u64* rows) noexcept nogil:
    """Canonical labeling of (n, rows) into _st.best / _st.best_lab; n >= 2."""
    cdef int lab[MAXN]
    cdef int cend[MAXN]
    cdef int i
    _st.n = n
    memcpy(_st.rows, rows, n * sizeof(u64))
    _st.have_first = 0
    _st.ngens = 0
    for i in range(n):
        lab[i] = i
        cend[i] = 0
    cend[0] = n
    refine(n, _st.rows, lab, cend, 0)
    visit(&_st, 0, lab, cend)


cdef object pack_best(int n):
    cdef int i
    cdef u64 small = 0
    if n * (n - 1) // 2 <= 64:
        for i in range(n - 1):
            small = (small << (n - 1 - i)) | _st.best[i]
        return small
    code = 0
    for i in range(n - 1):
        code = (code << (n - 1 - i)) | _st.best[i]
    return code


cdef int load_rows(object rows, int n, u64* out) except -1:
    cdef int i
    if n < 0 or n > MAXN:
        raise ValueError(f"order {n} outside kernel range 0..{MAXN}")
    for i in range(n):
        out[i] = <u64>rows[i]
    return 0


def canon(int n, rows):
    """Return ``(code, perm)``; ``perm[v]`` is the canonical label of ``v``."""
    cdef u64 r[MAXN]
    cdef int i
    if n <= 1:
        return 0, tuple(range(n))
    load_rows(rows, n, r)
    canon_core(n, r)
    perm = [0] * n
    for i in range(n):
        perm[_st.best_lab[i]] = i
    return pack_best(n), tuple(perm)


def canon_code(int n, rows):
    cdef u64 r[MAXN]
    if n <= 1:
        return 0
    load_rows(rows, n, r)
    canon_core(n, r)
    return pack_best(n)


def rows_from_code(int n, code):
    rows = [0] * n
    cdef int i, j
    cdef int shift = n * (n - 1) // 2
    for i in range(n - 1):
        for j in range(i + 1, n):
            shift -= 1
            if (code >> shift) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def extend_children(int n, rows, parent_code):
    """Codes of the (n+1)-vertex graphs owned by this n-vertex parent."""
    cdef u64 base[MAXN]
    cdef u64 child[MAXN]
    cdef u64 sub[MAXN]
    cdef int m = n + 1
    cdef int i, k, v, u, last
    cdef u64 s, r, x
    if m > MAXN:
        raise ValueError("order above kernel range")
    load_rows(rows, n, base)
    seen = {}
    for s in range((<u64>1) << n):
        for i in range(n):
            child[i] = base[i] | (((s >> i) & 1) << n)
        child[n] = s
        if m <= 1:
            code = 0
            last = 0
        else:
            canon_core(m, child)
            code = pack_best(m)
            last = _st.best_lab[m - 1]
        if code in seen:
            continue
        if last == n:
            ok = True
        else:
            k = 0
            for v in range(m):
                if v == last:
                    continue
                r = child[v]
                x = 0
                i = 0
                for u in range(m):
                    if u == last:
                        continue
                    if (r >> u) & 1:
                        x |= (<u64>1) << i
                    i += 1
                sub[k] = x
                k += 1
            if n <= 1:
                ok = parent_code == 0
            else:
                canon_core(n, sub)
                ok = pack_best(n) == parent_code
        seen[code] = ok
    return sorted([c for c, ok in seen.items() if ok])


cdef int graphical(int* degs, int m) noexcept nogil:
    cdef int d[MAXN]
    cdef int k = 0, i, j, t, total = 0, left, right
    for i in range(m):
        if degs[i] > 0:
            t = degs[i]
            j = k - 1
            while j >= 0 and d[j] < t:
                d[j + 1] = d[j]
                j -= 1
            d[j + 1] = t
            k += 1
            total += t
    if total & 1:
        return 0
    left = 0
    for t in range(1, k + 1):
        left += d[t - 1]
        right = t * (t - 1)
        for i in range(t, k):
            right += d[i] if d[i] < t else t
        if left > right:
            return 0
    return 1


def graphical_sequence(degs):
    """Erdos-Gallai test on a degree sequence."""
    cdef int d[MAXN]
    cdef int i, m = len(degs)
    if m > MAXN:
        raise ValueError("sequence too long")
    for i in range(m):
        d[i] = degs[i]
    return bool(graphical(d, m))


def regular_children(int n, int r, rows):
    """Codes of the states reached by saturating one vertex of a partial
    r-regular graph.  Empty when the state is already complete."""
    cdef u64 base[MAXN]
    cdef u64 child[MAXN]
    cdef int deg[MAXN]
    cdef int unsat[MAXN]
    cdef int cands[MAXN]
    cdef int idx[MAXN]
    cdef int deficits[MAXN]
    cdef int nu = 0, nc = 0, v, u, i, need, j
    load_rows(rows, n, base)
    for u in range(n):
        deg[u] = popcount(base[u])
        if deg[u] < r:
            unsat[nu] = u
            nu += 1
    if nu == 0:
        return []
    v = unsat[0]
    for i in range(nu):
        if deg[unsat[i]] > deg[v]:
            v = unsat[i]
    need = r - deg[v]
    for i in range(nu):
        if unsat[i] != v:
            cands[nc] = unsat[i]
            nc += 1
    out = set()
    if need > nc:
        return []
    for i in range(need):
        idx[i] = i
    while True:
        for i in range(nc):
            deficits[i] = r - deg[cands[i]]
        for i in range(need):
            deficits[idx[i]] -= 1
        if graphical(deficits, nc):
            memcpy(child, base, n * sizeof(u64))
            for i in range(need):
                u = cands[idx[i]]
                child[u] |= (<u64>1) << v
                child[v] |= (<u64>1) << u
            if n <= 1:
                out.add(0)
            else:
                canon_core(n, child)
                out.add(pack_best(n))
        # next combination in lexicographic order
        i = need - 1
        while i >= 0 and idx[i] == nc - need + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for j in range(i + 1, need):
            idx[j] = idx[j - 1] + 1
    return sorted(out)


def count_labeled_classes(int n):
    """Canonicalise every labeled graph on ``n`` vertices; count codes."""
    cdef int pi[MAXN * MAXN]
    cdef int pj[MAXN * MAXN]
    cdef u64 rows[MAXN]
    cdef int npairs = 0, i, j, k
    cdef u64 mask
    if n <= 1:
        return 1
    if n > 8:
        raise ValueError("labeled sweep limited to n <= 8")
    for i in range(n):
        for j in range(i + 1, n):
            pi[npairs] = i
            pj[npairs] = j
            npairs += 1
    codes = set()
    for mask in range((<u64>1) << npairs):
        for i in range(n):
            rows[i] = 0
        for k in range(npairs):
            if (mask >> k) & 1:
                rows[pi[k]] |= (<u64>1) << pj[k]
                rows[pj[k]] |= (<u64>1) << pi[k]
        canon_core(n, rows)
        codes.add(pack_best(n))
    return len(codes)
