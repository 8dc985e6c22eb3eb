"""Turning complex components into 2VC ones, then absorbing pendant 4-cycles.

An extending path of a complex component ``C`` leaves ``C``, walks through
distinct other components of ``S`` using graph edges outside ``S`` between
them, and returns to ``C`` at a different vertex.  It is clean when every
component it walks through is large.  Other large components group into
*regions* (connected through graph edges), so a clean path between two
vertices of ``C`` exists iff they are joined by a chord outside ``S`` or
touch a common region.  Pendant 4-cycles hosted by ``C`` give the only
non-clean paths.

``bridge_covering_step`` emits candidate moves case by case: paths off a
leaf-block through a pendant 4-cycle, single paths spanning two blocks or
four bridges, and then the cases anchored at an end of a longest path of the
block-cut tree.  The degenerate cases swap the first bridge for a virtual
edge on a scratch copy, reuse the anchored generators there, and splice the
real path back in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from .cover import neighbour_components, pendant_host
from .errors import InvariantError
from .graph import Block, Component, Decomposition, Edge, EdgeSet, Graph, adjacency, bfs_path, decompose_edges, edge, path_edges
from .moves import Move, Rewriter
from .small_components import three_matching

GENERIC_CAP = 20000


@dataclass(frozen=True)
class ExtendingPath:
    vertices: Tuple[int, ...]  # u ... v; the interior lies outside C
    components: Tuple[int, ...]  # traversed components, in order
    clean: bool

    @property
    def u(self) -> int:
        return self.vertices[0]

    @property
    def v(self) -> int:
        return self.vertices[-1]

    def edges(self) -> List[Edge]:
        return path_edges(self.vertices)


@dataclass(frozen=True)
class PathAnatomy:
    block: Block
    chain: Tuple[int, ...]  # u0 u1 u2 ... along the bridges after the leaf-block
    attached: Tuple[FrozenSet[int], ...]  # A(u_i)


@dataclass
class ScanInfo:
    first: Dict[int, object]
    blocks: Dict[int, int]
    bridges: Dict[int, int]


class ComplexContext:
    """Everything the case machine reads about one complex component."""

    def __init__(self, g: Graph, edges, d: Decomposition, ci: int):
        self.g = g
        self.edges = edges
        self.d = d
        self.ci = ci
        self.comp: Component = d.components[ci]
        self.cset = set(self.comp.vertices)
        self.cadj = adjacency(self.comp.edges)
        self.bridge_set = set(self.comp.bridges)
        self.piece_of: Dict[Edge, object] = {e: ("bridge", e) for e in self.comp.bridges}
        for i, b in enumerate(self.comp.blocks):
            for e in b.edges:
                self.piece_of[e] = ("block", i)
        self._scan_cache: Dict[int, ScanInfo] = {}
        self._adj_cache: Dict[int, dict] = {}
        self._index_outside()

    # -- outside structure --------------------------------------------------

    def _index_outside(self) -> None:
        d, ci = self.d, self.ci
        large = {i for i, c in enumerate(d.components) if i != ci and c.is_large}
        parent = {i: i for i in large}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        self.cross: Dict[Tuple[int, int], Edge] = {}
        self.comp_nbrs: Dict[int, Set[int]] = {i: set() for i in large}
        self.touch: Dict[int, Set[int]] = {v: set() for v in self.cset}  # v -> large comps
        self.chords: Dict[int, Set[int]] = {v: set() for v in self.cset}
        self.pendants = sorted(
            i for i, c in enumerate(d.components) if c.is_small and pendant_host(self.g, d, c) == ci
        )
        pend = set(self.pendants)
        self.pend_touch: Dict[int, Set[int]] = {v: set() for v in self.cset}
        for a, b in self.g.sorted_edges():
            ca, cb = d.comp_of[a], d.comp_of[b]
            if ca == ci and cb == ci:
                if edge(a, b) not in self.edges:
                    self.chords[a].add(b)
                    self.chords[b].add(a)
                continue
            if ca == cb:
                continue
            for x, cx, y, cy in ((a, ca, b, cb), (b, cb, a, ca)):
                if cx == ci:
                    if cy in large:
                        self.touch[x].add(cy)
                    elif cy in pend:
                        self.pend_touch[x].add(cy)
            if ca in large and cb in large:
                ra, rb = find(ca), find(cb)
                if ra != rb:
                    parent[ra] = rb
                self.comp_nbrs[ca].add(cb)
                self.comp_nbrs[cb].add(ca)
                self.cross.setdefault((ca, cb), (a, b))
                self.cross.setdefault((cb, ca), (b, a))
        self.region = {i: find(i) for i in large}
        self.region_touch: Dict[int, Set[int]] = {}
        self.vertex_regions: Dict[int, Set[int]] = {}
        for v in self.cset:
            rs = {self.region[c] for c in self.touch[v]}
            self.vertex_regions[v] = rs
            for r in rs:
                self.region_touch.setdefault(r, set()).add(v)
        self.pend_vertices: Dict[int, Set[int]] = {}
        for v in self.cset:
            for p in self.pend_touch[v]:
                self.pend_vertices.setdefault(p, set()).add(v)

    def comp_adj(self, i: int) -> dict:
        if i not in self._adj_cache:
            self._adj_cache[i] = adjacency(self.d.components[i].edges)
        return self._adj_cache[i]

    def clean_targets(self, v: int) -> Set[int]:
        out = set(self.chords[v])
        for r in self.vertex_regions[v]:
            out |= self.region_touch[r]
        out.discard(v)
        return out

    def nonclean_targets(self, v: int) -> Set[int]:
        out = set()
        for p in self.pend_touch[v]:
            out |= self.pend_vertices[p]
        out.discard(v)
        return out

    def clean_path(self, v: int, w: int, avoid: FrozenSet[int] = frozenset()) -> Optional[ExtendingPath]:
        """A clean extending path from v to w, preferring a chord, avoiding some components."""
        if v == w:
            return None
        if w in self.chords[v]:
            return ExtendingPath((v, w), (), True)
        common = sorted(self.vertex_regions[v] & self.vertex_regions[w])
        for r in common:
            starts = sorted(c for c in self.touch[v] if self.region[c] == r and c not in avoid)
            goals = {c for c in self.touch[w] if self.region[c] == r and c not in avoid}
            seq = self._comp_bfs(starts, goals, avoid)
            if seq is not None:
                return self._realize(v, w, seq)
        return None

    def _comp_bfs(self, starts, goals, avoid) -> Optional[List[int]]:
        prev = {s: None for s in starts}
        queue = list(starts)
        for c in queue:
            if c in goals:
                seq = [c]
                while prev[seq[-1]] is not None:
                    seq.append(prev[seq[-1]])
                return seq[::-1]
            for nb in sorted(self.comp_nbrs[c]):
                if nb not in prev and nb not in avoid:
                    prev[nb] = c
                    queue.append(nb)
        return None

    def _realize(self, v: int, w: int, seq: Sequence[int]) -> ExtendingPath:
        cof = self.d.comp_of
        verts = [v]
        entry = min(a for a in self.g.adj[v] if cof[a] == seq[0])
        for i, c in enumerate(seq):
            if i + 1 < len(seq):
                exit_, nxt = self.cross[(c, seq[i + 1])]
            else:
                exit_ = min(a for a in self.g.adj[w] if cof[a] == c)
            verts += bfs_path(self.comp_adj(c), entry, exit_)
            if i + 1 < len(seq):
                entry = nxt
        verts.append(w)
        return ExtendingPath(tuple(verts), tuple(seq), True)

    def nonclean_paths(self, v: int, w: int) -> Iterator[ExtendingPath]:
        cof = self.d.comp_of
        for p in sorted(self.pend_touch[v] & self.pend_touch.get(w, set())):
            a = min(x for x in self.g.adj[v] if cof[x] == p)
            b = min(x for x in self.g.adj[w] if cof[x] == p)
            inner = bfs_path(self.comp_adj(p), a, b)
            yield ExtendingPath(tuple([v] + inner + [w]), (p,), False)

    # -- inside C -------------------------------------------------------------

    def cpath(self, a: int, b: int) -> List[int]:
        return bfs_path(self.cadj, a, b)

    def scan(self, x: int) -> ScanInfo:
        """Pieces met on the path from x to every vertex of C."""
        if x not in self._scan_cache:
            first = {x: None}
            nblocks = {x: 0}
            nbridges = {x: 0}
            last = {x: None}
            queue = [x]
            for a in queue:
                for b in self.cadj[a]:
                    if b in first:
                        continue
                    piece = self.piece_of[edge(a, b)]
                    first[b] = first[a] if first[a] is not None else piece
                    nbridges[b] = nbridges[a] + (piece[0] == "bridge")
                    nblocks[b] = nblocks[a] + (piece[0] == "block" and piece != last[a])
                    last[b] = piece
                    queue.append(b)
            self._scan_cache[x] = ScanInfo(first, nblocks, nbridges)
        return self._scan_cache[x]

    def spans_two_pieces(self, x: int, y: int, block_index: int) -> bool:
        """P^C_xy uses block ``block_index`` and another block or at least 4 bridges."""
        s = self.scan(x)
        if s.first[y] != ("block", block_index):
            return False
        return s.blocks[y] >= 2 or s.bridges[y] >= 4

    def heavy_path(self, x: int, y: int) -> bool:
        """P^C_xy contains a block edge or at least 4 bridges (beyond its first piece)."""
        s = self.scan(x)
        return s.blocks[y] >= 1 or s.bridges[y] >= 4

    def side_without(self, e: Edge, root: int) -> Set[int]:
        """Vertices of C reachable from ``root`` without using edge ``e``."""
        a, b = e
        seen = {root}
        queue = [root]
        for x in queue:
            for y in self.cadj[x]:
                if y not in seen and edge(x, y) != edge(a, b):
                    seen.add(y)
                    queue.append(y)
        return seen

    def avoid_reach(self, src: int, banned: Set[int]) -> FrozenSet[int]:
        seen = {src}
        queue = [src]
        for x in queue:
            for y in self.cadj[x]:
                if y not in seen and y not in banned:
                    seen.add(y)
                    queue.append(y)
        seen.discard(src)
        return frozenset(seen)

    def leaf_block_at(self, v: int, exclude: Optional[Block] = None) -> Optional[Block]:
        cuts = set(self.comp.cut_vertices)
        for b in self.comp.leaf_blocks:
            if v in b.vertices and b is not exclude and (b.vertices & cuts) == {v}:
                return b
        return None

    def cut_of(self, b: Block) -> int:
        (c,) = b.vertices & set(self.comp.cut_vertices)
        return c

    def block_index(self, b: Block) -> int:
        return self.comp.blocks.index(b)

    def remark_pairs(self, b: Block) -> Iterator[Tuple[int, int]]:
        """Clean extending paths leaving a leaf-block away from its cut vertex."""
        c = self.cut_of(b)
        for x in sorted(b.vertices - {c}):
            for y in sorted(self.clean_targets(x) - b.vertices):
                yield x, y

    # -- anchors ------------------------------------------------------------

    def anatomies(self) -> List[PathAnatomy]:
        """Anchors at both ends of a longest path of the block-cut tree."""
        tree = self.comp.bc_tree
        leaves = sorted((n for n in tree if n[0] == "block" and len(tree[n]) == 1), key=lambda n: self._key(n))
        best = None
        for s in leaves:
            dist, prev = self._tree_bfs(tree, s)
            for t in leaves:
                if t == s:
                    continue
                cand = (-dist[t], self._key(s), self._key(t))
                if best is None or cand < best[0]:
                    best = (cand, s, t, prev)
        if best is None:
            return []
        _, s, t, prev = best
        path = [t]
        while path[-1] != s:
            path.append(prev[path[-1]])
        path.reverse()  # s ... t
        out = []
        for seq in (path, path[::-1]):
            an = self._anatomy(seq)
            if an is not None:
                out.append(an)
        return out

    def _key(self, node):
        kind, val = node
        return (0, tuple(sorted(self.comp.blocks[val].vertices))) if kind == "block" else (1, val)

    @staticmethod
    def _tree_bfs(tree, s):
        dist, prev = {s: 0}, {s: None}
        queue = [s]
        for a in queue:
            for b in tree[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    prev[b] = a
                    queue.append(b)
        return dist, prev

    def _anatomy(self, seq) -> Optional[PathAnatomy]:
        block = self.comp.blocks[seq[0][1]]
        chain = [seq[1][1]]
        i = 2
        while i + 1 < len(seq) and seq[i][0] == "bridge":
            chain.append(seq[i + 1][1])
            i += 2
        if len(chain) < 2:
            return None
        attached = []
        for k, u in enumerate(chain):
            banned = {chain[j] for j in (k - 1, k + 1) if 0 <= j < len(chain)}
            attached.append(self.avoid_reach(u, banned))
        return PathAnatomy(block, tuple(chain), tuple(attached))


# --- move assembly ---------------------------------------------------------------


def _disjoint(*paths: ExtendingPath) -> bool:
    seen: Set[int] = set()
    for p in paths:
        cs = set(p.components)
        if cs & seen:
            return False
        seen |= cs
    return True


def _with_paths(ctx: ComplexContext, rule: str, paths: Sequence[ExtendingPath], extra=(), removed=()) -> Optional[Move]:
    if any(p is None for p in paths) or not _disjoint(*paths):
        return None
    for p in paths:
        if not p.clean and len(p.components) != 1:
            raise InvariantError(f"non-clean extending path {p} traverses more than one component")
    added = {e for p in paths for e in p.edges() if e not in ctx.edges}
    added |= {edge(*e) for e in extra}
    return Move(rule, frozenset(added), frozenset(edge(*e) for e in removed), tuple(paths))


def _pendant_links(ctx: ComplexContext, p: int, first: Optional[int], ok_second) -> Iterator[Tuple[Edge, Edge, Edge]]:
    """(x1y1, x2y2, y1y2): two matching edges into pendant 4-cycle p on adjacent y1, y2."""
    cyc = ctx.d.components[p]
    cof = ctx.d.comp_of
    cverts = sorted(cyc.vertices)
    for y1 in cverts:
        xs1 = [x for x in ctx.g.adj[y1] if cof[x] == ctx.ci and (first is None or x == first)]
        for x1 in xs1:
            for y2 in sorted(ctx.comp_adj(p)[y1]):
                for x2 in ctx.g.adj[y2]:
                    if cof[x2] == ctx.ci and x2 != x1 and ok_second(x1, x2):
                        yield (x1, y1), (x2, y2), edge(y1, y2)


def case_nonclean_leaf(ctx: ComplexContext) -> Iterator[Move]:
    for b in ctx.comp.leaf_blocks:
        u = ctx.cut_of(b)
        for x in sorted(b.vertices - {u}):
            for p in sorted(ctx.pend_touch[x]):
                if not (ctx.pend_vertices[p] - b.vertices):
                    continue
                for l1, l2, rm in _pendant_links(ctx, p, x, lambda a, c: True):
                    yield Move.of("complex-1", [l1, l2], [rm])


def case_clean_two_pieces(ctx: ComplexContext) -> Iterator[Move]:
    for bi, b in enumerate(ctx.comp.blocks):
        for x in sorted(b.vertices):
            for y in sorted(ctx.clean_targets(x) - b.vertices):
                if ctx.spans_two_pieces(x, y, bi):
                    mv = _with_paths(ctx, "complex-2", [ctx.clean_path(x, y)])
                    if mv is not None:
                        yield mv


def _paths_pair(ctx, v, w, x, y):
    p1 = ctx.clean_path(v, w)
    if p1 is None:
        return None, None
    p2 = ctx.clean_path(x, y, frozenset(p1.components))
    return p1, p2


def case_to_a1(ctx: ComplexContext, an: PathAnatomy, sources=None) -> Iterator[Move]:
    u0, u1 = an.chain[0], an.chain[1]
    for v in sources if sources is not None else sorted(an.block.vertices - {u0}):
        for w in sorted(ctx.clean_targets(v) & an.attached[1]):
            if edge(u1, w) not in ctx.bridge_set:
                continue
            b2 = ctx.leaf_block_at(w, an.block)
            if b2 is None:
                continue
            for x, y in ctx.remark_pairs(b2):
                p1, p2 = _paths_pair(ctx, v, w, x, y)
                mv = _with_paths(ctx, "complex-3", [p1, p2], removed=[(u1, w)])
                if mv is not None:
                    yield mv


def case_to_a2(ctx: ComplexContext, an: PathAnatomy, sources=None) -> Iterator[Move]:
    if len(an.chain) < 3:
        return
    u0, u2 = an.chain[0], an.chain[2]
    for v in sources if sources is not None else sorted(an.block.vertices - {u0}):
        for w in sorted(ctx.clean_targets(v) & an.attached[2]):
            if edge(u2, w) not in ctx.bridge_set:
                continue
            others = sorted(z for z in ctx.cadj[w] if z != u2 and edge(w, z) in ctx.bridge_set)
            near = ctx.side_without(edge(u2, w), u0)
            if others:
                for w2 in others:
                    b2 = ctx.leaf_block_at(w2)
                    if b2 is None:
                        continue
                    for x, y in ctx.remark_pairs(b2):
                        if y == w or y not in near:
                            continue
                        p1, p2 = _paths_pair(ctx, v, w, x, y)
                        mv = _with_paths(ctx, "complex-4.1", [p1, p2])
                        if mv is not None:
                            yield mv
            else:
                b2 = ctx.leaf_block_at(w)
                if b2 is None:
                    continue
                for x, y in ctx.remark_pairs(b2):
                    if y not in near:
                        continue
                    p1, p2 = _paths_pair(ctx, v, w, x, y)
                    mv = _with_paths(ctx, "complex-4.2", [p1, p2], removed=[(u2, w)])
                    if mv is not None:
                        yield mv


def case_two_paths(ctx: ComplexContext, an: PathAnatomy, anomalies: List[str]) -> Iterator[Move]:
    if len(an.chain) < 4:
        return
    u0, u1, u2, u3 = an.chain[:4]
    inner = sorted(an.block.vertices - {u0})
    to_u2 = [v for v in inner if u2 in ctx.clean_targets(v)]
    to_u3 = [v for v in inner if u3 in ctx.clean_targets(v)]
    combos = [(a, b) for a in to_u2 for b in to_u3 if a != b]
    if not combos:
        return
    near = ctx.side_without(edge(u2, u3), u0)
    far = ctx.cset - near
    for v1, v2 in combos:
        # a pendant 4-cycle bridging the two sides
        for p in ctx.pendants:
            if not (ctx.pend_vertices[p] & near and ctx.pend_vertices[p] & far):
                continue
            path3 = ctx.clean_path(v2, u3, frozenset())
            for l1, l2, rm in _pendant_links(ctx, p, None, lambda a, c: a in near and c in far):
                mv = _with_paths(ctx, "complex-5.1", [path3], extra=[l1, l2], removed=[rm])
                if mv is not None:
                    yield mv
    for v1, v2 in combos:
        for x in sorted(far - {u3}):
            for y in sorted(ctx.clean_targets(x) & (near - {u0})):
                if y in an.attached[1] or y == u1:
                    p1, p2 = _paths_pair(ctx, v1, u2, x, y)
                    mv = _with_paths(ctx, "complex-5.2", [p1, p2], removed=[(u1, u2)])
                elif y in an.attached[2] or y == u2:
                    p1, p2 = _paths_pair(ctx, v2, u3, x, y)
                    mv = _with_paths(ctx, "complex-5.2", [p1, p2], removed=[(u2, u3)])
                else:
                    anomalies.append(f"two-path case met a crossing path ending at {y}")
                    continue
                if mv is not None:
                    yield mv


def case_degenerate(ctx: ComplexContext, an: PathAnatomy, anomalies: List[str]) -> Iterator[Move]:
    u0, u1 = an.chain[0], an.chain[1]
    bverts = an.block.vertices
    for v1 in sorted(bverts - {u0}):
        if u1 not in ctx.clean_targets(v1):
            continue
        virt = ctx.clean_path(v1, u1)
        clean_w = sorted(ctx.clean_targets(u0) - bverts - {u1})
        dirty_w = sorted(ctx.nonclean_targets(u0) - bverts - {u1})
        # the pendant 4-cycle on u0 turns into an ear through u1's side
        for w1 in dirty_w:
            for path in ctx.nonclean_paths(u0, w1):
                p = path.components[0]
                ok = lambda a, c: c not in an.attached[0] and c != u0
                for l1, l2, rm in _pendant_links(ctx, p, u0, ok):
                    mv = _with_paths(ctx, "complex-6.1", [virt], extra=[l1, l2], removed=[(u0, u1), rm])
                    if mv is not None:
                        yield mv
        for b2 in ctx.comp.leaf_blocks:
            if b2 is an.block or not b2.vertices <= an.attached[0] | {u0}:
                continue
            for x, y in ctx.remark_pairs(b2):
                if y in an.attached[0]:
                    continue
                p2 = ctx.clean_path(x, y, frozenset(virt.components))
                mv = _with_paths(ctx, "complex-6.2", [virt, p2], removed=[(u0, u1)])
                if mv is not None:
                    yield mv
        for w1 in clean_w:
            if ctx.heavy_path(u1, w1) or (ctx.scan(u0).blocks[w1] >= 1 or ctx.scan(u0).bridges[w1] >= 4):
                p2 = ctx.clean_path(u0, w1, frozenset(virt.components))
                mv = _with_paths(ctx, "complex-6.3", [virt, p2], removed=[(u0, u1)])
                if mv is not None:
                    yield mv
        if clean_w:
            yield from _virtual_cases(ctx, an, v1, virt, anomalies)


def _virtual_cases(ctx: ComplexContext, an: PathAnatomy, v1: int, virt: ExtendingPath, anomalies) -> Iterator[Move]:
    """Swap u0u1 for a virtual edge v1u1 and rerun the anchored cases."""
    u0, u1 = an.chain[0], an.chain[1]
    ve = edge(v1, u1)
    g2 = ctx.g if ctx.g.has_edge(v1, u1) else Graph(ctx.g.n, ctx.g.edges | {ve})
    s2 = (set(ctx.edges) - {edge(u0, u1)}) | {ve}
    d2 = decompose_edges(s2)
    ctx2 = ComplexContext(g2, s2, d2, d2.comp_of[u1])
    if not ctx2.comp.is_complex:
        return
    block2 = next((b for b in ctx2.comp.blocks if b.vertices == an.block.vertices), None)
    if block2 is None:
        return
    chain2 = (v1,) + an.chain[1:]
    attached2 = []
    for k, u in enumerate(chain2):
        banned = {chain2[j] for j in (k - 1, k + 1) if 0 <= j < len(chain2)}
        attached2.append(ctx2.avoid_reach(u, banned))
    an2 = PathAnatomy(block2, chain2, tuple(attached2))
    labels = {"complex-3": "complex-6.4", "complex-4.1": "complex-6.5", "complex-4.2": "complex-6.5",
              "complex-5.1": "complex-6.6", "complex-5.2": "complex-6.6"}
    inner = itertools.chain(
        case_to_a1(ctx2, an2, [u0]),
        case_to_a2(ctx2, an2, [u0]),
        case_two_paths(ctx2, an2, anomalies),
    )
    used = set(virt.components)
    for mv in inner:
        if ve in mv.removed:
            continue
        paths = [p for p in (mv.witness or ()) if p is not None]
        if any(set(p.components) & used for p in paths):
            continue
        added = (set(mv.added) - {ve}) | {e for e in virt.edges() if e not in ctx.edges}
        removed = set(mv.removed) | {edge(u0, u1)}
        yield Move(labels[mv.rule], frozenset(added), frozenset(removed), (virt,) + tuple(paths))


def generic_moves(ctx: ComplexContext) -> Iterator[Move]:
    """Bounded search over the move shapes the cases use."""
    count = 0
    verts = sorted(ctx.cset)
    singles = []
    for x in verts:
        for y in sorted(ctx.clean_targets(x)):
            if x < y:
                singles.append(ctx.clean_path(x, y))
    for p in singles:
        count += 1
        if count > GENERIC_CAP:
            return
        mv = _with_paths(ctx, "complex-generic", [p])
        if mv is not None:
            yield mv
    for p in singles:
        for e in ctx.comp.bridges:
            count += 1
            if count > GENERIC_CAP:
                return
            mv = _with_paths(ctx, "complex-generic", [p], removed=[e])
            if mv is not None:
                yield mv
    for p, q in itertools.combinations(singles, 2):
        for e in (None,) + ctx.comp.bridges:
            count += 1
            if count > GENERIC_CAP:
                return
            mv = _with_paths(ctx, "complex-generic", [p, q], removed=[e] if e else [])
            if mv is not None:
                yield mv


def bridge_covering_step(rw: Rewriter, ci: int, stats: Optional[dict] = None) -> Move:
    """Apply one certified move to complex component ``ci``."""
    ctx = ComplexContext(rw.graph, rw.edges, rw.d, ci)
    anomalies: List[str] = []

    def anchored():
        for an in ctx.anatomies():
            yield from case_to_a1(ctx, an)
            yield from case_to_a2(ctx, an)
            yield from case_two_paths(ctx, an, anomalies)
            yield from case_degenerate(ctx, an, anomalies)

    def fallback():
        if stats is not None:
            stats["generic_entered"] = stats.get("generic_entered", 0) + 1
        yield from generic_moves(ctx)

    cands = itertools.chain(case_nonclean_leaf(ctx), case_clean_two_pieces(ctx), anchored(), fallback())
    try:
        mv = rw.apply_first(cands, "complex", f"complex component {ci}")
    except InvariantError as exc:
        if anomalies:
            raise InvariantError(f"{exc}; anomalies: {anomalies[:4]}") from None
        raise
    if stats is not None and mv.rule == "complex-generic":
        stats["generic"] = stats.get("generic", 0) + 1
    return mv


def complex_indices(rw: Rewriter) -> List[int]:
    return [i for i, c in enumerate(rw.d.components) if c.is_complex]


def run_complex_phase(rw: Rewriter, stats: Optional[dict] = None) -> int:
    applied = 0
    guard = sum(len(c.blocks) + len(c.bridges) for c in rw.d.components) + len(rw.d.components) + 1
    for _ in range(guard):
        todo = complex_indices(rw)
        if not todo:
            return applied
        bridge_covering_step(rw, todo[0], stats)
        applied += 1
    raise InvariantError("complex-component phase stalled")


def pendant_moves(rw: Rewriter, ci: int) -> Iterator[Move]:
    g = rw.graph
    comp = rw.d.components[ci]
    cset = set(comp.vertices)
    m = three_matching(g, sorted(cset), sorted(set(range(g.n)) - cset))
    ms = sorted((a, b) if a in cset else (b, a) for a, b in m.edges)
    alls = sorted((a, b) for a in sorted(cset) for b in g.adj[a] if b not in cset)
    seen = set()
    for pool in (ms, alls):
        for (a1, a2), (b1, b2) in itertools.combinations(pool, 2):
            if a2 == b2 or edge(a1, b1) not in comp.edges or ((a1, a2), (b1, b2)) in seen:
                continue
            seen.add(((a1, a2), (b1, b2)))
            yield Move.of("pendant", [(a1, a2), (b1, b2)], [(a1, b1)])


def run_pendant_phase(rw: Rewriter) -> int:
    applied = 0
    for _ in range(rw.graph.n + 1):
        todo = [i for i, c in enumerate(rw.d.components) if c.is_small]
        if not todo:
            return applied
        ci = todo[0]
        c = rw.d.components[ci]
        host = pendant_host(rw.graph, rw.d, c)
        if host is None or not rw.d.components[host].is_2vc:
            raise InvariantError(f"component {ci} is small but not a pendant 4-cycle on a 2VC host")
        rw.apply_first(pendant_moves(rw, ci), "pendant", f"pendant 4-cycle {ci}")
        applied += 1
    raise InvariantError("pendant phase exceeded its iteration bound")


def absorb_pendant_4cycles(s: EdgeSet, log=None) -> EdgeSet:
    rw = Rewriter(s, log)
    run_pendant_phase(rw)
    return rw.edge_set


def eliminate_complex(s: EdgeSet, log=None, stats=None) -> EdgeSet:
    rw = Rewriter(s, log)
    run_complex_phase(rw, stats)
    run_pendant_phase(rw)
    return rw.edge_set


def auxiliary_graph(s: EdgeSet, v: int) -> Tuple[Graph, Dict[Edge, Optional[ExtendingPath]]]:
    """G_C on the component of ``v``, relabelled to its sorted vertex list.

    Returns the graph and, per relabelled edge, a witness extending path
    (None for edges of C itself).
    """
    d = decompose_edges(s.edges)
    ctx = ComplexContext(s.graph, s.edges, d, d.comp_of[v])
    verts = sorted(ctx.cset)
    idx = {x: i for i, x in enumerate(verts)}
    witness: Dict[Edge, Optional[ExtendingPath]] = {}
    for a, b in ctx.comp.edges:
        witness[edge(idx[a], idx[b])] = None
    for a in verts:
        for b in sorted(ctx.clean_targets(a) | ctx.nonclean_targets(a)):
            e = edge(idx[a], idx[b])
            if a < b and e not in witness:
                p = ctx.clean_path(a, b) if b in ctx.clean_targets(a) else next(ctx.nonclean_paths(a, b))
                witness[e] = p
    return Graph(len(verts), frozenset(witness)), witness
