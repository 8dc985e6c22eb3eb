"""Removing small components other than pendant 4-cycles.

Two rewriting procedures, both reducing the number of components of ``S``
without raising its cost:

* a small cycle adjacent to at least two other components is threaded into
  a path ``P`` of shortcut paths that is grown on both ends (bridging);
* a small cycle adjacent to exactly one other component is merged into it
  (leaf).

Each procedure emits candidate moves in the order of its case analysis and
the ``Rewriter`` keeps the first one that checks out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .cover import neighbour_components, pendant_host
from .errors import InvariantError
from .graph import Component, Edge, EdgeSet, Graph, adjacency, bfs_path, edge, path_edges
from .matching import Matching, bipartite_matching
from .moves import Move, Rewriter


# --- matchings and shortcut pairs ------------------------------------------------


def three_matching(g: Graph, v1: Sequence[int], v2: Sequence[int]) -> Matching:
    """Three disjoint edges between the two sides of a partition of V(g)."""
    s1, s2 = set(v1), set(v2)
    if s1 & s2 or len(s1) + len(s2) != g.n:
        raise InvariantError("three_matching needs a partition of the vertex set")
    for side in (s1, s2):
        if len(side) < 3:
            raise InvariantError("both sides need at least 3 vertices")
        if len(side) == 3:
            a, b, c = sorted(side)
            if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
                raise InvariantError("a side of 3 vertices must induce a triangle")
    m = bipartite_matching((a, b) for a in sorted(s1) for b in g.adj[a] if b in s2)
    if len(m) < 3:
        raise InvariantError(f"no matching of size 3 across the partition (found {len(m)})")
    return Matching(frozenset(sorted(m.edges)[:3]))


def cycle_order(comp: Component) -> List[int]:
    """Vertices of a cycle component in cyclic order from its smallest vertex."""
    adj = adjacency(comp.edges)
    start = min(comp.vertices)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in adj[cur] if w != prev) if prev is None else next(w for w in adj[cur] if w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _arc(order: Sequence[int], a: int, b: int) -> Tuple[int, ...]:
    """The a-b path along the cycle that avoids the cycle edge ab."""
    k = len(order)
    i, j = order.index(a), order.index(b)
    if (i + 1) % k == j:
        step = -1
    elif (j + 1) % k == i:
        step = 1
    else:
        raise InvariantError(f"{a} and {b} are not adjacent on the cycle")
    out = [a]
    while out[-1] != b:
        out.append(order[(order.index(out[-1]) + step) % k])
    return tuple(out)


@dataclass(frozen=True)
class ShortcutPair:
    u: int
    v: int
    x: int  # matching partner of u outside the cycle
    y: int  # matching partner of v outside the cycle
    path: Tuple[int, ...]  # Hamiltonian u-v path of the cycle's vertex set

    @property
    def matching(self) -> Tuple[Edge, Edge]:
        return edge(self.u, self.x), edge(self.v, self.y)

    def check(self, g: Graph, comp: Component) -> None:
        cset = set(comp.vertices)
        if self.x in cset or self.y in cset or self.x == self.y or self.u == self.v:
            raise InvariantError(f"bad shortcut matching {self}")
        if not (g.has_edge(self.u, self.x) and g.has_edge(self.v, self.y)):
            raise InvariantError(f"shortcut matching of {self} is not in the graph")
        p = self.path
        if sorted(p) != sorted(cset) or p[0] != self.u or p[-1] != self.v:
            raise InvariantError(f"shortcut path {p} is not Hamiltonian")
        if any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            raise InvariantError(f"shortcut path {p} leaves the graph")
        if edge(p[0], p[1]) not in comp.edges or edge(p[-2], p[-1]) not in comp.edges:
            raise InvariantError(f"shortcut path {p} must start and end on cycle edges")


def _outside(g: Graph, cset, a: int) -> List[int]:
    return [b for b in g.adj[a] if b not in cset]


def _matching_through(g: Graph, cset, w: int, x: int):
    """A 3-matching out of the cycle using an edge into ``x``, ``w``'s first."""
    firsts = [w] + sorted(u for u in g.adj[x] if u in cset and u != w)
    for u0 in firsts:
        rest = bipartite_matching((a, b) for a in sorted(cset - {u0}) for b in _outside(g, cset, a) if b != x)
        if len(rest) >= 2:
            pairs = []
            for a, b in sorted(rest.edges)[:2]:
                pairs.append((a, b) if a in cset else (b, a))
            return [(u0, x)] + pairs
    raise InvariantError(f"no 3-matching out of cycle {sorted(cset)} through {x}")


def find_shortcut_pair(g: Graph, comp: Component, w: int, x: int) -> List[ShortcutPair]:
    """Shortcut pairs of the small cycle ``comp`` whose matching uses an edge into ``x``.

    One pair for 4- and 5-cycles, two pairs with distinct far endpoints for
    triangles.
    """
    cset = set(comp.vertices)
    if w not in cset or x in cset or not g.has_edge(w, x):
        raise InvariantError("find_shortcut_pair needs an edge wx leaving the cycle at w")
    order = cycle_order(comp)
    (w1, _), (w2, x2), (w3, x3) = _matching_through(g, cset, w, x)
    if len(order) == 3:
        out = [ShortcutPair(w1, w2, x, x2, (w1, w3, w2)), ShortcutPair(w1, w3, x, x3, (w1, w2, w3))]
    else:
        out = []
        for wi, xi in ((w2, x2), (w3, x3)):
            if edge(w1, wi) in comp.edges:
                out.append(ShortcutPair(w1, wi, x, xi, _arc(order, w1, wi)))
                break
        if not out:
            # any matching into x on two adjacent cycle vertices will do
            firsts = [w] + sorted(u for u in g.adj[x] if u in cset and u != w)
            for u0 in firsts:
                for wi in sorted(b for a, b in _cycle_nbrs(order, u0)):
                    xs = [y for y in _outside(g, cset, wi) if y != x]
                    if xs and not out:
                        out.append(ShortcutPair(u0, wi, x, xs[0], _arc(order, u0, wi)))
        if not out:
            out.append(_five_cycle_pair(g, order, w1, x, {w2: x2, w3: x3}))
    for p in out:
        p.check(g, comp)
    return out


def _cycle_nbrs(order, v):
    i = order.index(v)
    k = len(order)
    return [(v, order[(i - 1) % k]), (v, order[(i + 1) % k])]


def _five_cycle_pair(g: Graph, order, w1: int, x: int, far: Dict[int, int]) -> ShortcutPair:
    """5-cycle whose other matched vertices both sit opposite ``w1``."""
    if len(order) != 5:
        raise InvariantError("4-cycles always have an adjacent matched pair")
    i = order.index(w1)
    a, p, q, b = (order[(i + k) % 5] for k in (1, 2, 3, 4))
    # order is w1 a p q b; the matched vertices are p and q
    if g.has_edge(a, b):
        return ShortcutPair(w1, p, x, far[p], (w1, a, b, q, p))
    if g.has_edge(a, q):
        return ShortcutPair(w1, p, x, far[p], (w1, b, q, a, p))
    if g.has_edge(b, p):
        return ShortcutPair(w1, q, x, far[q], (w1, a, p, b, q))
    raise InvariantError(f"5-cycle {tuple(order)} is removable; the graph is not structured")


def _hamiltonian_paths(g: Graph, comp: Component, u: int, v: int) -> Iterator[Tuple[int, ...]]:
    inner = sorted(set(comp.vertices) - {u, v})
    for perm in itertools.permutations(inner):
        p = (u,) + perm + (v,)
        if edge(p[0], p[1]) not in comp.edges or edge(p[-2], p[-1]) not in comp.edges:
            continue
        if all(g.has_edge(a, b) for a, b in zip(p, p[1:])):
            yield p


def all_shortcut_pairs(g: Graph, comp: Component) -> List[ShortcutPair]:
    """Every shortcut pair with every matching, in lexicographic order."""
    cset = set(comp.vertices)
    out = []
    for u, v in itertools.permutations(sorted(cset), 2):
        paths = list(itertools.islice(_hamiltonian_paths(g, comp, u, v), 1))
        if not paths:
            continue
        for x in _outside(g, cset, u):
            for y in _outside(g, cset, v):
                if x != y:
                    out.append(ShortcutPair(u, v, x, y, paths[0]))
    return out


# --- bridging small components -----------------------------------------------


@dataclass
class ExtensionState:
    path: List[int]  # w_L ... w_R
    absorbed: List[int] = field(default_factory=list)  # interior components, left to right
    halted: Dict[str, ShortcutPair] = field(default_factory=dict)
    alternatives: Dict[str, List[ShortcutPair]] = field(default_factory=dict)


def _seed_pairs(g: Graph, rw: Rewriter, ci: int) -> Iterator[ShortcutPair]:
    """Shortcut pairs of component ``ci`` whose matching reaches two other components."""
    comp = rw.d.components[ci]
    cset = set(comp.vertices)
    cof = rw.d.comp_of

    def good(p):
        return cof[p.x] != cof[p.y]

    m = three_matching(g, sorted(cset), sorted(set(range(g.n)) - cset))
    oriented = sorted((a, b) if a in cset else (b, a) for a, b in m.edges)
    picks = None
    for (a, x1), (b, x2) in itertools.combinations(oriented, 2):
        if cof[x1] != cof[x2]:
            picks = (a, x1), (b, x2)
            break
    if picks is None:
        target = cof[oriented[0][1]]
        extra = next((a, z) for a in sorted(cset) for z in _outside(g, cset, a) if cof[z] != target)
        other = next(e for e in oriented if e[0] != extra[0])
        picks = other, extra
    (a, x1), (b, x2) = picks
    p1s = find_shortcut_pair(g, comp, a, x1)
    p2s = find_shortcut_pair(g, comp, b, x2)
    for p in p1s + p2s:
        if good(p):
            yield p
    p1, p2 = p1s[0], p2s[0]
    ends1 = {p1.u: p1.x, p1.v: p1.y}
    ends2 = {p2.u: p2.x, p2.v: p2.y}
    # the pairs share a vertex: keep one path, take the shared vertex's other partner
    for base, other in ((p1, ends2), (p2, ends1)):
        for s in (base.u, base.v):
            if s not in other:
                continue
            if s == base.u:
                p = ShortcutPair(base.u, base.v, other[s], base.y, base.path)
            else:
                p = ShortcutPair(base.u, base.v, base.x, other[s], base.path)
            if p.x != p.y and good(p):
                yield p
    for s, t in itertools.product(sorted(ends1), sorted(ends2)):
        if s != t and edge(s, t) in comp.edges:
            p = ShortcutPair(s, t, ends1[s], ends2[t], _arc(cycle_order(comp), s, t))
            if good(p):
                yield p
    for p in all_shortcut_pairs(g, comp):
        if cof[p.x] != ci and cof[p.y] != ci and good(p):
            yield p


def _expand(g: Graph, rw: Rewriter, st: ExtensionState, side: str) -> None:
    """Grow ``st.path`` at its right end (callers reverse it for the left side)."""
    cof = rw.d.comp_of
    while True:
        path = st.path
        end = rw.d.components[cof[path[-1]]]
        if end.is_large:
            return
        far_comp = set(rw.d.components[cof[path[0]]].vertices)
        forbidden = far_comp | set(path)
        pairs = find_shortcut_pair(g, end, path[-1], path[-2])
        ahead = sorted((p for p in pairs if p.y not in forbidden), key=lambda p: (p.u, p.v, p.y))
        if ahead:
            p = ahead[0]
            st.absorbed.append(cof[path[-1]])
            st.path = path[:-1] + list(p.path) + [p.y]
            continue
        if len(pairs) > 1:
            pos = {v: i for i, v in enumerate(path)}
            # farthest from the right end along P; outside P means the far component
            pairs = sorted(pairs, key=lambda p: (pos.get(p.y, -1), p.u, p.v))
        p = pairs[0]
        st.path = path[:-1] + [p.u]
        st.halted[side] = p
        st.alternatives[side] = pairs[1:]
        return


def _flip(st: ExtensionState) -> None:
    st.path.reverse()
    st.absorbed.reverse()


def extend_path(g: Graph, rw: Rewriter, seed: ShortcutPair) -> ExtensionState:
    st = ExtensionState([seed.x] + list(seed.path) + [seed.y], [rw.d.comp_of[seed.u]])
    _expand(g, rw, st, "R")
    _flip(st)
    _expand(g, rw, st, "L")
    _flip(st)
    if len(st.path) < 5:
        raise InvariantError("the extended path needs at least 4 edges")
    return st


def _bridging_moves(g: Graph, rw: Rewriter, st: ExtensionState) -> Iterator[Move]:
    comps = rw.d.components
    cof = rw.d.comp_of
    path = st.path
    witness = tuple(path)
    # merging an end cycle into the cycle holding the path's second edge
    for side in ("L", "R"):
        p = st.halted.get(side)
        if p is None:
            continue
        seq = path if side == "L" else path[::-1]
        u1, u2 = seq[1], seq[2]
        end_edges = comps[cof[seq[0]]].edges
        options = []
        if p.y == u2:
            options.append(("b.2", p))
        elif len(seq) > 3 and p.y == seq[3] and len(end_edges) == 3:
            options += [("b.3", q) for q in st.alternatives[side] if q.y == u2 and q.u == p.u]
        for label, q in options:
            kept = set(path_edges(q.path))
            yield Move.of(
                f"bridging-{label}",
                added=(kept - end_edges) | {edge(q.u, u1), edge(q.v, u2)},
                removed=(end_edges - kept) | {edge(u1, u2)},
                witness=witness,
            )
    added = set(path_edges(path))
    removed = set()
    for ci in st.absorbed:
        removed |= comps[ci].edges
    for side, p in st.halted.items():
        end = comps[cof[p.u]].edges
        removed |= end
        added |= set(path_edges(p.path)) | {edge(p.v, p.y)}
    both = added & removed
    added -= both
    removed -= both
    if not st.halted:
        label = "a"
    else:
        side = "L" if "L" in st.halted else "R"
        p = st.halted[side]
        other = path[-1] if side == "L" else path[0]
        label = "b.1" if cof[p.y] == cof[other] else "b.4"
    yield Move(f"bridging-{label}", frozenset(added), frozenset(removed), witness)


def merge_bridging_small_component(rw: Rewriter, ci: Optional[int] = None) -> Iterator[Move]:
    """Candidate moves absorbing a small component adjacent to two or more others."""
    g = rw.graph
    if ci is None:
        ci = next(iter(bridging_small_components(rw)), None)
        if ci is None:
            return
    seen = set()
    for seed in _seed_pairs(g, rw, ci):
        for s in (seed, ShortcutPair(seed.v, seed.u, seed.y, seed.x, seed.path[::-1])):
            key = (s.u, s.v, s.x, s.y, s.path)
            if key in seen:
                continue
            seen.add(key)
            yield from _bridging_moves(g, rw, extend_path(g, rw, s))


def bridging_small_components(rw: Rewriter) -> List[int]:
    out = []
    for i, c in enumerate(rw.d.components):
        if c.is_small and len(neighbour_components(rw.graph, rw.d, c)) >= 2:
            out.append(i)
    return out


# --- leaf small components ----------------------------------------------------


def leaf_small_components(rw: Rewriter) -> List[int]:
    out = []
    for i, c in enumerate(rw.d.components):
        if not c.is_small or len(neighbour_components(rw.graph, rw.d, c)) != 1:
            continue
        if pendant_host(rw.graph, rw.d, c) is None:
            out.append(i)
    return out


def _path_in(comp: Component, a: int, b: int) -> List[int]:
    p = bfs_path(adjacency(comp.edges), a, b)
    if p is None:
        raise InvariantError(f"no path between {a} and {b} inside a component")
    return p


def _path_credit(comp: Component, p: Sequence[int]) -> Tuple[bool, int]:
    """(uses a block edge, number of bridges) of a path inside ``comp``."""
    bridges = set(comp.bridges)
    es = path_edges(p)
    nb = sum(1 for e in es if e in bridges)
    return nb < len(es), nb


def absorb_leaf_small_component(rw: Rewriter, ci: Optional[int] = None) -> Iterator[Move]:
    """Candidate moves merging a leaf small component into its only neighbour."""
    g = rw.graph
    if ci is None:
        ci = next(iter(leaf_small_components(rw)), None)
        if ci is None:
            return
    comp = rw.d.components[ci]
    cset = set(comp.vertices)
    (host_i,) = neighbour_components(g, rw.d, comp)
    host = rw.d.components[host_i]
    m = three_matching(g, sorted(cset), sorted(set(range(g.n)) - cset))
    ms = sorted((a, b) if a in cset else (b, a) for a, b in m.edges)
    # every pair of crossing edges, those of the 3-matching first
    extra = sorted(
        ((a, b), (c, d))
        for a in sorted(cset)
        for b in _outside(g, cset, a)
        for c in sorted(cset)
        for d in _outside(g, cset, c)
        if a < c and b != d
    )
    pairs = list(itertools.combinations(ms, 2)) + [p for p in extra if p not in itertools.combinations(ms, 2)]
    k, k2 = len(comp.edges), len(host.edges)
    if host.is_small:
        for (u1, v1), (u2, v2) in pairs:
            if edge(u1, u2) not in comp.edges:
                continue
            link = [edge(u1, v1), edge(u2, v2)]
            if 3 in (k, k2) or (k, k2) == (4, 4):
                if edge(v1, v2) in host.edges:
                    label = "1.1" if (k, k2) == (4, 4) else "1.2"
                    yield Move.of(f"leaf-{label}", link, [edge(u1, u2), edge(v1, v2)])
            else:
                if k2 == 5:
                    yield Move.of("leaf-1.3", link, [edge(u1, u2)])
                if edge(v1, v2) in host.edges:
                    yield Move.of("leaf-1.3", link, [edge(v1, v2)])
        return
    if k == 5:
        for (u1, v1), (u2, v2) in pairs:
            if edge(u1, u2) not in comp.edges:
                continue
            link = [edge(u1, v1), edge(u2, v2)]
            block, nb = _path_credit(host, _path_in(host, v1, v2))
            if block or nb >= 2:
                yield Move.of("leaf-2.1.1", link, [edge(u1, u2)])
            elif edge(v1, v2) in host.bridges:
                yield Move.of("leaf-2.1.2", link, [edge(u1, u2), edge(v1, v2)])
        return
    # triangle on a large host
    for (u1, v1), (u2, v2) in pairs:
        block, nb = _path_credit(host, _path_in(host, v1, v2))
        if block or nb >= 4:
            yield Move.of("leaf-2.2.1", [edge(u1, v1), edge(u2, v2)], [edge(u1, u2)])
    for (u1, v1), (u2, v2) in pairs:
        if edge(v1, v2) in host.bridges:
            yield Move.of("leaf-2.2.2", [edge(u1, v1), edge(u2, v2)], [edge(u1, u2), edge(v1, v2)])
    for trio in [ms] + [list(t) for t in itertools.combinations(sorted(set(e for p in pairs for e in p)), 3)]:
        if len({a for a, _ in trio}) < 3 or len({b for _, b in trio}) < 3:
            continue
        paths = []
        for (a1, b1), (a2, b2) in itertools.combinations(trio, 2):
            p = _path_in(host, b1, b2)
            paths.append((-len(p), (a1, b1), (a2, b2), p))
        paths.sort()
        _, (u1, v1), (u2, v2), p = paths[0]
        degree = adjacency(host.edges)
        for inner, end, (ua, va), (ub, vb) in (
            (p[1], v1, (u1, v1), (u2, v2)),
            (p[-2], v2, (u2, v2), (u1, v1)),
        ):
            if len(degree[inner]) >= 3:
                yield Move.of(
                    "leaf-2.2.3",
                    [edge(ua, va), edge(ub, vb)],
                    [edge(ua, ub), edge(end, inner)],
                )


# --- driver -------------------------------------------------------------------


def run_small_phase(rw: Rewriter) -> int:
    """Apply bridging and leaf moves until only pendant 4-cycles are small."""
    n = rw.graph.n
    applied = 0
    for _ in range(2 * n + 1):
        bridging = bridging_small_components(rw)
        if bridging:
            ci = bridging[0]
            rw.apply_first(merge_bridging_small_component(rw, ci), "small", f"bridging component {ci}")
            applied += 1
            continue
        leaves = leaf_small_components(rw)
        if leaves:
            ci = leaves[0]
            rw.apply_first(absorb_leaf_small_component(rw, ci), "small", f"leaf component {ci}")
            applied += 1
            continue
        return applied
    raise InvariantError(f"small-component phase exceeded {2 * n} moves")


def remove_small_components(s: EdgeSet, log=None) -> EdgeSet:
    rw = Rewriter(s, log)
    run_small_phase(rw)
    return rw.edge_set
