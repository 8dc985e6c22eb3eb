"""Graph representation, edge subsets and block decomposition.

Vertices are dense integers ``0..n-1``.  Edges are normalised tuples
``(u, v)`` with ``u < v``.  Everything iterates in increasing id order so
that every downstream rewrite is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class GraphError(ValueError):
    """Raised for malformed graphs or edge sets that leave the ambient graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]
    adj: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            if u > v:
                raise GraphError(f"edge {(u, v)} is not normalised")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(x)) for x in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def without_edges(self, removed: Iterable[Edge]) -> "Graph":
        return Graph(self.n, self.edges - frozenset(removed))

    def induced_components(self, removed: Iterable[int] = ()) -> List[List[int]]:
        """Connected components of ``G - removed`` (sorted lists)."""
        gone = set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        return components(keep, lambda v: (w for w in self.adj[v] if w not in gone))


@dataclass(frozen=True)
class EdgeSet:
    """A subset of the edges of an ambient graph."""

    graph: Graph
    edges: FrozenSet[Edge]

    def __post_init__(self):
        extra = self.edges - self.graph.edges
        if extra:
            raise GraphError(f"edges {sorted(extra)[:3]} not in the ambient graph")

    @classmethod
    def of(cls, graph: Graph, edges: Iterable[Sequence[int]]) -> "EdgeSet":
        return cls(graph, frozenset(edge(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(sorted(self.edges))

    def __contains__(self, e) -> bool:
        return edge(*e) in self.edges

    def replace(self, added: Iterable[Edge] = (), removed: Iterable[Edge] = ()) -> "EdgeSet":
        return EdgeSet(self.graph, (self.edges - frozenset(removed)) | frozenset(added))

    def adjacency(self) -> Dict[int, List[int]]:
        return adjacency(self.edges)

    def degrees(self) -> List[int]:
        deg = [0] * self.graph.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_2_edge_cover(self) -> bool:
        return all(d >= 2 for d in self.degrees())


def adjacency(edges: Iterable[Edge]) -> Dict[int, List[int]]:
    adj: Dict[int, List[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nb in adj.values():
        nb.sort()
    return adj


def components(vertices: Iterable[int], neighbours) -> List[List[int]]:
    """Connected components given a vertex list and a neighbour function."""
    seen = set()
    out = []
    for s in sorted(vertices):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in neighbours(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def bfs_path(adj, src: int, dst: int, allowed=None) -> Optional[List[int]]:
    """Shortest ``src``-``dst`` vertex path, smallest-id neighbours first."""
    if src == dst:
        return [src]
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()) if isinstance(adj, dict) else adj[v]:
            if w in prev or (allowed is not None and w not in allowed):
                continue
            prev[w] = v
            if w == dst:
                path = [w]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def path_edges(path: Sequence[int]) -> List[Edge]:
    return [edge(a, b) for a, b in zip(path, path[1:])]


def biconnected_groups(vertices: Iterable[int], adj) -> Tuple[List[List[Edge]], set]:
    """Edge groups of the biconnected components and the articulation points.

    Iterative lowpoint traversal; a group with a single edge is a bridge.
    """
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    groups: List[List[Edge]] = []
    cuts = set()
    clock = 0
    for root in sorted(vertices):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(adj.get(root, ())))]
        estack: List[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = clock
                    clock += 1
                    estack.append((v, w))
                    stack.append((w, v, iter(adj.get(w, ()))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    low[v] = min(low[v], disc[w])
                    estack.append((v, w))
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                group = []
                while True:
                    a, b = estack.pop()
                    group.append(edge(a, b))
                    if (a, b) == (p, v):
                        break
                groups.append(sorted(group))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return groups, cuts


@dataclass(frozen=True)
class Block:
    vertices: FrozenSet[int]
    edges: FrozenSet[Edge]

    @property
    def key(self):
        return tuple(sorted(self.vertices))


@dataclass(frozen=True)
class Component:
    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]
    blocks: Tuple[Block, ...]
    bridges: Tuple[Edge, ...]
    cut_vertices: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def is_small(self) -> bool:
        return len(self.edges) <= 5

    @property
    def is_large(self) -> bool:
        return len(self.edges) >= 6

    @property
    def is_2vc(self) -> bool:
        return len(self.blocks) == 1 and not self.bridges

    @property
    def is_complex(self) -> bool:
        return self.is_large and not self.is_2vc

    @property
    def leaf_blocks(self) -> Tuple[Block, ...]:
        cuts = set(self.cut_vertices)
        return tuple(b for b in self.blocks if len(b.vertices & cuts) == 1)

    def is_cycle(self) -> bool:
        return len(self.edges) == len(self.vertices) and len(self.blocks) == 1

    @property
    def bc_tree(self) -> Dict[tuple, List[tuple]]:
        """Block-cutpoint tree: ``("block", i)``, ``("bridge", e)``, ``("cut", v)``."""
        tree: Dict[tuple, List[tuple]] = {}
        cuts = set(self.cut_vertices)
        pieces = [(("block", i), b.vertices) for i, b in enumerate(self.blocks)]
        pieces += [(("bridge", e), frozenset(e)) for e in self.bridges]
        for v in self.cut_vertices:
            tree[("cut", v)] = []
        for node, verts in pieces:
            tree[node] = []
            for v in sorted(verts & cuts):
                tree[node].append(("cut", v))
                tree[("cut", v)].append(node)
        return tree


@dataclass(frozen=True)
class Decomposition:
    components: Tuple[Component, ...]
    comp_of: Dict[int, int] = field(compare=False)

    @property
    def blocks(self) -> List[Block]:
        return [b for c in self.components for b in c.blocks]

    @property
    def bridges(self) -> List[Edge]:
        return [e for c in self.components for e in c.bridges]

    @property
    def cut_vertices(self) -> List[int]:
        return [v for c in self.components for v in c.cut_vertices]

    @property
    def leaf_blocks(self) -> List[Block]:
        return [b for c in self.components for b in c.leaf_blocks]

    @property
    def bc_trees(self) -> List[Dict[tuple, List[tuple]]]:
        return [c.bc_tree for c in self.components]

    def component(self, v: int) -> Component:
        return self.components[self.comp_of[v]]


def decompose_edges(edges: Iterable[Edge]) -> Decomposition:
    edges = frozenset(edges)
    adj = adjacency(edges)
    comps = components(adj.keys(), lambda v: adj[v])
    groups, cuts = biconnected_groups(adj.keys(), adj)
    by_root: Dict[int, List[List[Edge]]] = {}
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    for g in groups:
        by_root.setdefault(comp_of[g[0][0]], []).append(g)
    out = []
    for i, comp in enumerate(comps):
        blocks, bridges = [], []
        for g in by_root.get(i, []):
            if len(g) == 1:
                bridges.append(g[0])
            else:
                verts = frozenset(x for e in g for x in e)
                blocks.append(Block(verts, frozenset(g)))
        blocks.sort(key=lambda b: b.key)
        bridges.sort()
        cset = set(comp)
        out.append(Component(
            vertices=tuple(comp),
            edges=frozenset(e for e in edges if e[0] in cset),
            blocks=tuple(blocks),
            bridges=tuple(bridges),
            cut_vertices=tuple(sorted(cuts & cset)),
        ))
    return Decomposition(tuple(out), comp_of)


def decompose(s: EdgeSet) -> Decomposition:
    return decompose_edges(s.edges)


def is_2vc(s, spanning: bool = True) -> bool:
    """2-vertex-connectivity of an edge set (or a graph).

    With ``spanning`` the test is over all ``n`` vertices of the ambient
    graph, so isolated vertices make the answer false.
    """
    if isinstance(s, Graph):
        g, edges = s, s.edges
    else:
        g, edges = s.graph, s.edges
    adj = adjacency(edges)
    verts = range(g.n) if spanning else adj.keys()
    verts = list(verts)
    if len(verts) < 3 or any(v not in adj for v in verts):
        return False
    if len(components(verts, lambda v: adj[v])) != 1:
        return False
    _, cuts = biconnected_groups(verts, adj)
    return not cuts


def contract(g: Graph, w: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Collapse ``w`` into one new vertex (the largest new id).

    Self-loops vanish and parallel edges are kept once.  Returns the
    contracted graph and the old-to-new vertex mapping.
    """
    w = set(w)
    if not w:
        raise GraphError("cannot contract an empty vertex set")
    if not w <= set(range(g.n)):
        raise GraphError(f"vertices {sorted(w - set(range(g.n)))} not in graph")
    rest = [v for v in range(g.n) if v not in w]
    mapping = {v: i for i, v in enumerate(rest)}
    hub = len(rest)
    for v in w:
        mapping[v] = hub
    new_edges = set()
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            new_edges.add(edge(a, b))
    return Graph(hub + 1, frozenset(new_edges)), mapping


# small named graphs used by tests, generators and the CLI

def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle on ``1..rim``."""
    es = [(0, i) for i in range(1, rim + 1)]
    es += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, es)
