"""Pure-Python implementations of the hot kernels.

The compiled module ``_ckernels`` exposes the same functions with the same
signatures and results; ``kernels`` picks one at import time.

Graphs are passed as ``n`` plus a list of normalised ``(u, v)`` edges, or as
an adjacency list of sorted neighbour lists.  Every function is deterministic.
"""

import time
from collections import deque

from .errors import BudgetExceeded


def articulation_points(n, adj, removed=-1):
    """Sorted cut vertices of the graph ``adj`` with vertex ``removed`` deleted."""
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    clock = 0
    for root in range(n):
        if root == removed or disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        children = 0
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            nb = adj[v]
            if i < len(nb):
                stack[-1] = (v, parent, i + 1)
                w = nb[i]
                if w == removed or w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, 0))
                elif disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            stack.pop()
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent == root:
                children += 1
            elif low[v] >= disc[parent]:
                cut[parent] = True
        if children > 1:
            cut[root] = True
    return [v for v in range(n) if cut[v]]


def two_vertex_cuts(n, adj):
    """All pairs ``(u, v)``, ``u < v``, whose removal disconnects a connected graph."""
    out = []
    for u in range(n):
        for v in articulation_points(n, adj, u):
            if v > u:
                out.append((u, v))
    return out


def max_matching(n, adj):
    """Maximum-cardinality matching by Edmonds' blossom algorithm.

    Returns ``mate`` with ``mate[v] == -1`` for exposed vertices.
    """
    mate = [-1] * n
    # greedy start keeps the augmenting phase short
    for v in range(n):
        if mate[v] < 0:
            for w in adj[v]:
                if mate[w] < 0:
                    mate[v] = w
                    mate[w] = v
                    break
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_path(root):
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    cur = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, cur, to)
                    mark_path(to, cur, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for v in range(n):
        if mate[v] >= 0:
            continue
        end = find_path(v)
        while end >= 0:
            pv = parent[end]
            nxt = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = nxt
    return mate


# --- exact searches -------------------------------------------------------


def _connected(mask_adj, verts):
    """Whether the vertex bitmask ``verts`` is connected under ``mask_adj``."""
    if verts == 0:
        return True
    start = verts & -verts
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        new = mask_adj[v] & verts & ~seen
        seen |= new
        frontier |= new
    return seen == verts


def _is_2vc_mask(n, edges, emask):
    full = (1 << n) - 1
    nbr = [0] * n
    i = 0
    m = emask
    while m:
        if m & 1:
            u, v = edges[i]
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        m >>= 1
        i += 1
    if n < 3 or not _connected(nbr, full):
        return False
    for v in range(n):
        if not _connected(nbr, full & ~(1 << v)):
            return False
    return True


def _split_witness(n, edges, inc):
    """For a non-2VC spanning edge mask, a vertex set that must be left by an edge.

    Returns ``(side, avoid)``: every 2VC superset of ``inc`` has an edge with
    one end in ``side`` and the other outside ``side | avoid``.
    """
    full = (1 << n) - 1
    nbr = [0] * n
    for i, (u, v) in enumerate(edges):
        if inc >> i & 1:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u

    def comp_of(start, verts):
        seen = start
        frontier = start
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = nbr[low.bit_length() - 1] & verts & ~seen
            seen |= new
            frontier |= new
        return seen

    comp = comp_of(1, full)
    if comp != full:
        return comp, 0
    for c in range(n):
        rest = full & ~(1 << c)
        start = rest & -rest
        comp = comp_of(start, rest)
        if comp != rest:
            return comp, 1 << c
    return None


def exact_2vcss(n, edges, node_limit=2_000_000, deadline=None):
    """Minimum 2VC spanning edge subset by branch and bound.

    ``edges`` is a sorted list of normalised pairs; returns the chosen edge
    indices in increasing order.  Raises ``BudgetExceeded`` past
    ``node_limit`` search nodes.
    """
    m = len(edges)
    if n < 3 or not _is_2vc_mask(n, edges, (1 << m) - 1):
        raise ValueError("input graph is not 2-vertex-connected")
    inc_at = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc_at[u].append(i)
        inc_at[v].append(i)
    best = [(1 << m) - 1, m]
    nodes = [0]

    def search(inc, avail, size):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise BudgetExceeded(f"exact 2VCSS search exceeded {node_limit} nodes")
        if deadline is not None and nodes[0] & 1023 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("exact 2VCSS search passed its deadline")
        if best[1] == n:
            return
        deficit = 0
        pick = -1
        pick_opts = None
        for v in range(n):
            d = 0
            opts = []
            for i in inc_at[v]:
                if inc >> i & 1:
                    d += 1
                elif avail >> i & 1:
                    opts.append(i)
            if d < 2:
                need = 2 - d
                if len(opts) < need:
                    return
                deficit += need
                if pick_opts is None or len(opts) < len(pick_opts):
                    pick, pick_opts = v, opts
        lower = size + (deficit + 1) // 2
        if lower < n:
            lower = n
        if lower >= best[1]:
            return
        if not _is_2vc_mask(n, edges, inc | avail):
            return
        if pick < 0:
            if _is_2vc_mask(n, edges, inc):
                best[0], best[1] = inc, size
                return
            if size + 1 >= best[1]:
                return
            side, avoid = _split_witness(n, edges, inc)
            pick_opts = []
            for i, (u, v) in enumerate(edges):
                if not avail >> i & 1:
                    continue
                a, b = side >> u & 1, side >> v & 1
                if a != b:
                    other = v if a else u
                    if not avoid >> other & 1:
                        pick_opts.append(i)
        rest = avail
        for i in pick_opts:
            rest &= ~(1 << i)
            search(inc | (1 << i), rest, size + 1)
            if best[1] == n:
                return

    search(0, (1 << m) - 1, 0)
    return [i for i in range(m) if best[0] >> i & 1]


def exact_min_2edge_cover(n, edges, node_limit=2_000_000, deadline=None):
    """Minimum edge subset giving every vertex degree at least 2 (edge indices)."""
    m = len(edges)
    inc_at = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc_at[u].append(i)
        inc_at[v].append(i)
    if any(len(x) < 2 for x in inc_at):
        raise ValueError("some vertex has degree below 2")
    best = [(1 << m) - 1, m]
    nodes = [0]

    def search(inc, avail, size):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise BudgetExceeded(f"exact 2-edge-cover search exceeded {node_limit} nodes")
        if deadline is not None and nodes[0] & 1023 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("exact 2-edge-cover search passed its deadline")
        deficit = 0
        pick_opts = None
        for v in range(n):
            d = 0
            opts = []
            for i in inc_at[v]:
                if inc >> i & 1:
                    d += 1
                elif avail >> i & 1:
                    opts.append(i)
            if d < 2:
                need = 2 - d
                if len(opts) < need:
                    return
                deficit += need
                if pick_opts is None or len(opts) < len(pick_opts):
                    pick_opts = opts
        if pick_opts is None:
            if size < best[1]:
                best[0], best[1] = inc, size
            return
        if size + (deficit + 1) // 2 >= best[1]:
            return
        rest = avail
        for i in pick_opts:
            rest &= ~(1 << i)
            search(inc | (1 << i), rest, size + 1)

    search(0, (1 << m) - 1, 0)
    return [i for i in range(m) if best[0] >> i & 1]


def exact_max_matching(n, edges, node_limit=2_000_000, deadline=None):
    """Maximum matching by exhaustive branching (edge indices)."""
    adj_e = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj_e[u].append((v, i))
        adj_e[v].append((u, i))
    best = [[], 0]
    nodes = [0]
    chosen = []

    def search(v, used, size):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise BudgetExceeded(f"exact matching search exceeded {node_limit} nodes")
        if deadline is not None and nodes[0] & 1023 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded("exact matching search passed its deadline")
        while v < n and used >> v & 1:
            v += 1
        if v >= n:
            if size > best[1]:
                best[0], best[1] = list(chosen), size
            return
        free = n - v - bin(used >> v).count("1")
        if size + free // 2 <= best[1]:
            return
        for w, i in adj_e[v]:
            if not used >> w & 1:
                chosen.append(i)
                search(v + 1, used | (1 << v) | (1 << w), size + 1)
                chosen.pop()
        search(v + 1, used | (1 << v), size)

    search(0, 0, 0)
    return sorted(best[0])
