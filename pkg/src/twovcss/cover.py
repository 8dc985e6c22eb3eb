"""Minimum 2-edge-covers, their canonical form and the component taxonomy."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import kernels
from .errors import InvariantError
from .graph import Component, Decomposition, Edge, EdgeSet, Graph, decompose, decompose_edges, edge


def max_simple_2matching(g: Graph) -> List[Edge]:
    """Maximum edge set with every degree at most 2, via the vertex gadget.

    Vertex ``v`` becomes ``deg(v)`` stubs plus ``deg(v) - 2`` absorbers joined
    to all of its stubs; each graph edge joins the two stubs it owns.  A
    maximum matching of the gadget saturates the absorbers, so the stub-stub
    edges it uses form a maximum simple 2-matching.
    """
    stub: Dict[Tuple[int, Edge], int] = {}
    nid = 0
    for v in range(g.n):
        for w in g.adj[v]:
            stub[(v, edge(v, w))] = nid
            nid += 1
    nbrs: List[List[int]] = [[] for _ in range(nid)]
    edge_of: Dict[Tuple[int, int], Edge] = {}
    for e in g.sorted_edges():
        a, b = stub[(e[0], e)], stub[(e[1], e)]
        nbrs[a].append(b)
        nbrs[b].append(a)
        edge_of[(min(a, b), max(a, b))] = e
    absorbers = []
    for v in range(g.n):
        mine = [stub[(v, edge(v, w))] for w in g.adj[v]]
        for _ in range(len(mine) - 2):
            ab = nid
            nid += 1
            nbrs.append(list(mine))
            absorbers.append((ab, mine))
            for s in mine:
                nbrs[s].append(ab)
    mate = list(kernels.max_matching(nid, nbrs))
    # A maximum matching need not saturate the absorbers; move each free one
    # onto a stub of its vertex (free, or matched across a graph edge).  The
    # size is unchanged and afterwards every vertex keeps at most 2 stubs.
    for ab, mine in absorbers:
        if mate[ab] >= 0:
            continue
        free = [s for s in mine if mate[s] < 0]
        crossing = [s for s in mine if mate[s] >= 0 and (min(s, mate[s]), max(s, mate[s])) in edge_of]
        s = (free or crossing)[0]
        if mate[s] >= 0:
            mate[mate[s]] = -1
        mate[s], mate[ab] = ab, s
    out = []
    for a, b in enumerate(mate):
        if b > a and (a, b) in edge_of:
            out.append(edge_of[(a, b)])
    return sorted(out)


def min_2edge_cover(g: Graph) -> EdgeSet:
    """Minimum 2-edge-cover: a maximum simple 2-matching plus greedy completion."""
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise ValueError("some vertex has degree below 2")
    chosen = set(max_simple_2matching(g))
    deg = [0] * g.n
    for u, v in chosen:
        deg[u] += 1
        deg[v] += 1
    for v in range(g.n):
        for w in g.adj[v]:
            if deg[v] >= 2:
                break
            e = edge(v, w)
            if e not in chosen:
                chosen.add(e)
                deg[v] += 1
                deg[w] += 1
    return EdgeSet(g, frozenset(chosen))


# --- canonical form -------------------------------------------------------


def _measure(d: Decomposition) -> Tuple[int, int]:
    return len(d.components), sum(len(c.blocks) + len(c.bridges) for c in d.components)


def is_canonical(s: EdgeSet, d: Optional[Decomposition] = None) -> bool:
    """Small components are cycles; leaf-blocks of complex components have >= 5 nodes."""
    d = d or decompose(s)
    for c in d.components:
        if c.is_small:
            if not c.is_cycle():
                return False
        elif c.is_complex:
            if any(len(b.vertices) < 5 for b in c.leaf_blocks):
                return False
    return True


def canonicalize(h: EdgeSet) -> EdgeSet:
    """Single-swap improvement to a canonical cover of the same size.

    A swap adds ``e`` outside the cover and removes ``e'`` inside it, keeps a
    2-edge-cover and lowers (components, bridges + blocks) lexicographically.
    Candidates are scanned in edge order and the first improvement is taken.
    In a minimal cover ``e'`` must share an endpoint with ``e`` and its other
    endpoint must have degree at least 3, so only those pairs are tried.
    """
    g = h.graph
    if not h.is_2_edge_cover():
        raise InvariantError("canonicalize needs a 2-edge-cover")
    s = set(h.edges)
    cap = max(1, g.m * g.n)
    for _ in range(cap):
        swap = _find_swap(g, s)
        if swap is None:
            break
        e, e2 = swap
        s.add(e)
        s.discard(e2)
    else:
        raise InvariantError(f"canonicalize exceeded {cap} swaps")
    out = EdgeSet(g, frozenset(s))
    if len(out) != len(h) or not out.is_2_edge_cover():
        raise InvariantError("canonicalize changed the size or broke the cover")
    if not is_canonical(out):
        raise InvariantError("canonicalize ended on a non-canonical cover")
    return out


def _find_swap(g: Graph, s: set):
    d = decompose_edges(s)
    deg = [0] * g.n
    for u, v in s:
        deg[u] += 1
        deg[v] += 1
    sadj: Dict[int, List[int]] = {}
    for u, v in s:
        sadj.setdefault(u, []).append(v)
        sadj.setdefault(v, []).append(u)
    local_cache: Dict[Tuple[int, ...], Tuple[frozenset, Tuple[int, int]]] = {}

    def local(ids):
        if ids not in local_cache:
            es = frozenset().union(*(d.components[i].edges for i in ids))
            local_cache[ids] = (es, _measure(Decomposition(tuple(d.components[i] for i in ids), {})))
        return local_cache[ids]

    for e in g.sorted_edges():
        if e in s:
            continue
        a, b = e
        ids = tuple(sorted({d.comp_of[a], d.comp_of[b]}))
        base_edges, before = local(ids)
        cands = []
        for x, y in ((a, b), (b, a)):
            for z in sadj.get(x, ()):
                if deg[z] >= 3 and z != y:
                    cands.append(edge(x, z))
        for e2 in sorted(set(cands)):
            # x keeps degree: it gains e and loses e2
            after = _measure(decompose_edges((base_edges - {e2}) | {e}))
            if after < before:
                return e, e2
    return None


# --- classification -------------------------------------------------------


@dataclass(frozen=True)
class ComponentClass:
    index: int
    size: str  # "small" | "large"
    kind: str  # "cycle" (small) | "2vc" | "complex"
    leaf_blocks: Tuple[Tuple[int, ...], ...]
    pendant: bool
    host: Optional[int]  # component index the pendant 4-cycle hangs off


@dataclass(frozen=True)
class CoverClassification:
    decomposition: Decomposition
    components: Tuple[ComponentClass, ...]

    def small(self):
        return [c for c in self.components if c.size == "small"]

    def complex(self):
        return [c for c in self.components if c.kind == "complex"]


def neighbour_components(g: Graph, d: Decomposition, comp: Component) -> List[int]:
    """Indices of other components joined to ``comp`` by a graph edge."""
    own = d.comp_of[comp.vertices[0]]
    out = set()
    for v in comp.vertices:
        for w in g.adj[v]:
            i = d.comp_of[w]
            if i != own:
                out.add(i)
    return sorted(out)


def pendant_host(g: Graph, d: Decomposition, comp: Component) -> Optional[int]:
    """Host index if ``comp`` is a pendant 4-cycle, else None."""
    if not (comp.is_cycle() and len(comp.edges) == 4):
        return None
    nb = neighbour_components(g, d, comp)
    if len(nb) == 1 and d.components[nb[0]].is_large:
        return nb[0]
    return None


def classify(s: EdgeSet) -> CoverClassification:
    if not s.is_2_edge_cover():
        raise InvariantError("classify needs a 2-edge-cover")
    d = decompose(s)
    out = []
    for i, c in enumerate(d.components):
        if c.is_small:
            host = pendant_host(s.graph, d, c)
            out.append(ComponentClass(i, "small", "cycle" if c.is_cycle() else "other", (), host is not None, host))
        else:
            kind = "2vc" if c.is_2vc else "complex"
            leaves = tuple(b.key for b in c.leaf_blocks) if kind == "complex" else ()
            out.append(ComponentClass(i, "large", kind, leaves, False, None))
    return CoverClassification(d, tuple(out))
