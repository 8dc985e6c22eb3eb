# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Same signatures, same results.  The exact searches use 64-bit edge masks,
so they accept at most 64 edges; ``kernels`` routes larger inputs to the
Python versions.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

from .errors import BudgetExceeded

ctypedef unsigned long long u64


cdef struct CSR:
    int n
    int *start
    int *nbr


cdef CSR make_csr(int n, adj) except *:
    cdef CSR g
    cdef int total = 0, i, k, v
    for row in adj:
        total += len(row)
    g.n = n
    g.start = <int *> malloc((n + 1) * sizeof(int))
    g.nbr = <int *> malloc((total + 1) * sizeof(int))
    k = 0
    for v in range(n):
        g.start[v] = k
        for w in adj[v]:
            g.nbr[k] = w
            k += 1
    g.start[n] = k
    return g


cdef void free_csr(CSR g):
    free(g.start)
    free(g.nbr)


cdef void _ap(CSR g, int removed, char *cut, int *disc, int *low,
              int *st_v, int *st_p, int *st_i):
    cdef int n = g.n, clock = 0, root, top, v, parent, i, w, children
    for v in range(n):
        disc[v] = -1
        cut[v] = 0
    for root in range(n):
        if root == removed or disc[root] >= 0:
            continue
        disc[root] = clock
        low[root] = clock
        clock += 1
        children = 0
        top = 0
        st_v[0] = root
        st_p[0] = -1
        st_i[0] = g.start[root]
        while top >= 0:
            v = st_v[top]
            parent = st_p[top]
            i = st_i[top]
            if i < g.start[v + 1]:
                st_i[top] = i + 1
                w = g.nbr[i]
                if w == removed or w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = clock
                    low[w] = clock
                    clock += 1
                    top += 1
                    st_v[top] = w
                    st_p[top] = v
                    st_i[top] = g.start[w]
                elif disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            top -= 1
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent == root:
                children += 1
            elif low[v] >= disc[parent]:
                cut[parent] = 1
        if children > 1:
            cut[root] = 1


def articulation_points(int n, adj, int removed=-1):
    cdef CSR g = make_csr(n, adj)
    cdef char *cut = <char *> malloc(n + 1)
    cdef int *buf = <int *> malloc(5 * (n + 1) * sizeof(int))
    cdef int v
    try:
        _ap(g, removed, cut, buf, buf + (n + 1), buf + 2 * (n + 1),
            buf + 3 * (n + 1), buf + 4 * (n + 1))
        return [v for v in range(n) if cut[v]]
    finally:
        free(cut)
        free(buf)
        free_csr(g)


def two_vertex_cuts(int n, adj):
    cdef CSR g = make_csr(n, adj)
    cdef char *cut = <char *> malloc(n + 1)
    cdef int *buf = <int *> malloc(5 * (n + 1) * sizeof(int))
    cdef int u, v
    out = []
    try:
        for u in range(n):
            _ap(g, u, cut, buf, buf + (n + 1), buf + 2 * (n + 1),
                buf + 3 * (n + 1), buf + 4 * (n + 1))
            for v in range(u + 1, n):
                if cut[v]:
                    out.append((u, v))
        return out
    finally:
        free(cut)
        free(buf)
        free_csr(g)


# --- blossom ---------------------------------------------------------------

cdef int _lca(int n, int a, int b, int *mate, int *parent, int *base, char *seen):
    memset(seen, 0, n)
    while True:
        a = base[a]
        seen[a] = 1
        if mate[a] < 0:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = parent[mate[b]]


cdef void _mark(int v, int b, int child, int *mate, int *parent, int *base, char *blossom):
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[mate[v]]] = 1
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


cdef int _find_path(CSR g, int root, int *mate, int *parent, int *base,
                    char *used, char *blossom, char *seen, int *queue):
    cdef int n = g.n, head = 0, tail = 0, v, to, k, i, cur
    for i in range(n):
        used[i] = 0
        parent[i] = -1
        base[i] = i
    used[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(g.start[v], g.start[v + 1]):
            to = g.nbr[k]
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                cur = _lca(n, v, to, mate, parent, base, seen)
                memset(blossom, 0, n)
                _mark(v, cur, to, mate, parent, base, blossom)
                _mark(to, cur, v, mate, parent, base, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = 1
                            queue[tail] = i
                            tail += 1
            elif parent[to] < 0:
                parent[to] = v
                if mate[to] < 0:
                    return to
                used[mate[to]] = 1
                queue[tail] = mate[to]
                tail += 1
    return -1


def max_matching(int n, adj):
    cdef CSR g = make_csr(n, adj)
    cdef int *ib = <int *> malloc(4 * (n + 1) * sizeof(int))
    cdef char *cb = <char *> malloc(3 * (n + 1))
    cdef int *mate = ib
    cdef int *parent = ib + (n + 1)
    cdef int *base = ib + 2 * (n + 1)
    cdef int *queue = ib + 3 * (n + 1)
    cdef int v, k, w, end, pv, nxt
    try:
        for v in range(n):
            mate[v] = -1
        for v in range(n):
            if mate[v] < 0:
                for k in range(g.start[v], g.start[v + 1]):
                    w = g.nbr[k]
                    if mate[w] < 0:
                        mate[v] = w
                        mate[w] = v
                        break
        for v in range(n):
            if mate[v] >= 0:
                continue
            end = _find_path(g, v, mate, parent, base, cb, cb + (n + 1),
                             cb + 2 * (n + 1), queue)
            while end >= 0:
                pv = parent[end]
                nxt = mate[pv]
                mate[end] = pv
                mate[pv] = end
                end = nxt
        return [mate[v] for v in range(n)]
    finally:
        free(ib)
        free(cb)
        free_csr(g)


# --- exact searches ----------------------------------------------------------

cdef struct Search:
    int n
    int m
    int *eu
    int *ev
    int *inc_start
    int *inc_idx
    u64 best
    int best_size
    long long nodes
    long long node_limit
    int stop_at


cdef extern from *:
    int __builtin_ctzll(unsigned long long)


cdef inline int _lowbit(u64 x):
    return __builtin_ctzll(x)


cdef bint _connected(u64 *nbr, u64 verts):
    cdef u64 seen, frontier, low, new
    if verts == 0:
        return True
    seen = verts & (~verts + 1)
    frontier = seen
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        new = nbr[_lowbit(low)] & verts & ~seen
        seen |= new
        frontier |= new
    return seen == verts


cdef void _build(Search *s, u64 emask, u64 *nbr):
    cdef int i
    for i in range(s.n):
        nbr[i] = 0
    for i in range(s.m):
        if (emask >> i) & 1:
            nbr[s.eu[i]] |= (<u64> 1) << s.ev[i]
            nbr[s.ev[i]] |= (<u64> 1) << s.eu[i]


cdef bint _is2vc(Search *s, u64 emask):
    cdef u64 nbr[64]
    cdef u64 full = ((<u64> 1) << s.n) - 1
    cdef int v
    _build(s, emask, nbr)
    if s.n < 3 or not _connected(nbr, full):
        return False
    for v in range(s.n):
        if not _connected(nbr, full & ~((<u64> 1) << v)):
            return False
    return True


cdef u64 _comp_of(u64 *nbr, u64 start, u64 verts):
    cdef u64 seen = start, frontier = start, low, new
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        new = nbr[_lowbit(low)] & verts & ~seen
        seen |= new
        frontier |= new
    return seen


cdef void _split(Search *s, u64 inc, u64 *side, u64 *avoid):
    cdef u64 nbr[64]
    cdef u64 full = ((<u64> 1) << s.n) - 1
    cdef u64 rest, comp
    cdef int c
    _build(s, inc, nbr)
    comp = _comp_of(nbr, 1, full)
    if comp != full:
        side[0] = comp
        avoid[0] = 0
        return
    for c in range(s.n):
        rest = full & ~((<u64> 1) << c)
        comp = _comp_of(nbr, rest & (~rest + 1), rest)
        if comp != rest:
            side[0] = comp
            avoid[0] = (<u64> 1) << c
            return
    side[0] = 0
    avoid[0] = 0


cdef int _search_2vcss(Search *s, u64 inc, u64 avail, int size) except -1:
    cdef int v, k, i, d, cnt, need, deficit = 0, lower, pick_cnt = 1 << 30
    cdef int opts[64]
    cdef int pick[64]
    cdef u64 side, avoid, rest
    cdef int a, b, other
    s.nodes += 1
    if s.nodes > s.node_limit:
        raise BudgetExceeded(f"exact 2VCSS search exceeded {s.node_limit} nodes")
    if s.best_size == s.stop_at:
        return 0
    for v in range(s.n):
        d = 0
        cnt = 0
        for k in range(s.inc_start[v], s.inc_start[v + 1]):
            i = s.inc_idx[k]
            if (inc >> i) & 1:
                d += 1
            elif (avail >> i) & 1:
                opts[cnt] = i
                cnt += 1
        if d < 2:
            need = 2 - d
            if cnt < need:
                return 0
            deficit += need
            if cnt < pick_cnt:
                pick_cnt = cnt
                for k in range(cnt):
                    pick[k] = opts[k]
    lower = size + (deficit + 1) // 2
    if lower < s.n:
        lower = s.n
    if lower >= s.best_size:
        return 0
    if not _is2vc(s, inc | avail):
        return 0
    if pick_cnt == 1 << 30:
        if _is2vc(s, inc):
            s.best = inc
            s.best_size = size
            return 0
        if size + 1 >= s.best_size:
            return 0
        _split(s, inc, &side, &avoid)
        pick_cnt = 0
        for i in range(s.m):
            if not (avail >> i) & 1:
                continue
            a = (side >> s.eu[i]) & 1
            b = (side >> s.ev[i]) & 1
            if a != b:
                other = s.ev[i] if a else s.eu[i]
                if not (avoid >> other) & 1:
                    pick[pick_cnt] = i
                    pick_cnt += 1
    rest = avail
    for k in range(pick_cnt):
        rest &= ~((<u64> 1) << pick[k])
        _search_2vcss(s, inc | ((<u64> 1) << pick[k]), rest, size + 1)
        if s.best_size == s.stop_at:
            return 0
    return 0


cdef int _search_cover(Search *s, u64 inc, u64 avail, int size) except -1:
    cdef int v, k, i, d, cnt, need, deficit = 0, pick_cnt = 1 << 30
    cdef int opts[64]
    cdef int pick[64]
    cdef u64 rest
    s.nodes += 1
    if s.nodes > s.node_limit:
        raise BudgetExceeded(f"exact 2-edge-cover search exceeded {s.node_limit} nodes")
    for v in range(s.n):
        d = 0
        cnt = 0
        for k in range(s.inc_start[v], s.inc_start[v + 1]):
            i = s.inc_idx[k]
            if (inc >> i) & 1:
                d += 1
            elif (avail >> i) & 1:
                opts[cnt] = i
                cnt += 1
        if d < 2:
            need = 2 - d
            if cnt < need:
                return 0
            deficit += need
            if cnt < pick_cnt:
                pick_cnt = cnt
                for k in range(cnt):
                    pick[k] = opts[k]
    if pick_cnt == 1 << 30:
        if size < s.best_size:
            s.best = inc
            s.best_size = size
        return 0
    if size + (deficit + 1) // 2 >= s.best_size:
        return 0
    rest = avail
    for k in range(pick_cnt):
        rest &= ~((<u64> 1) << pick[k])
        _search_cover(s, inc | ((<u64> 1) << pick[k]), rest, size + 1)
    return 0


cdef Search *_make_search(int n, edges, long long node_limit) except NULL:
    cdef int m = len(edges)
    cdef Search *s
    cdef int i, k, v
    if m > 64 or n > 64:
        raise ValueError("compiled exact search supports at most 64 edges")
    s = <Search *> malloc(sizeof(Search))
    s.n = n
    s.m = m
    s.eu = <int *> malloc((m + 1) * sizeof(int))
    s.ev = <int *> malloc((m + 1) * sizeof(int))
    s.inc_start = <int *> malloc((n + 1) * sizeof(int))
    s.inc_idx = <int *> malloc((2 * m + 1) * sizeof(int))
    for i in range(m):
        s.eu[i] = edges[i][0]
        s.ev[i] = edges[i][1]
    k = 0
    for v in range(n):
        s.inc_start[v] = k
        for i in range(m):
            if s.eu[i] == v or s.ev[i] == v:
                s.inc_idx[k] = i
                k += 1
    s.inc_start[n] = k
    s.best = ((<u64> 1) << m) - 1 if m < 64 else ~(<u64> 0)
    s.best_size = m
    s.nodes = 0
    s.node_limit = node_limit
    s.stop_at = -1
    return s


cdef void _free_search(Search *s):
    free(s.eu)
    free(s.ev)
    free(s.inc_start)
    free(s.inc_idx)
    free(s)


def exact_2vcss(int n, edges, long long node_limit=2_000_000):
    cdef Search *s = _make_search(n, edges, node_limit)
    cdef u64 full = s.best
    cdef int i
    try:
        if n < 3 or not _is2vc(s, full):
            raise ValueError("input graph is not 2-vertex-connected")
        s.stop_at = n
        _search_2vcss(s, 0, full, 0)
        return [i for i in range(s.m) if (s.best >> i) & 1]
    finally:
        _free_search(s)


def exact_min_2edge_cover(int n, edges, long long node_limit=2_000_000):
    cdef Search *s = _make_search(n, edges, node_limit)
    cdef int v, i
    try:
        for v in range(n):
            if s.inc_start[v + 1] - s.inc_start[v] < 2:
                raise ValueError("some vertex has degree below 2")
        _search_cover(s, 0, s.best, 0)
        return [i for i in range(s.m) if (s.best >> i) & 1]
    finally:
        _free_search(s)

