"""Detectors for irrelevant edges, non-isolating 2-cuts and removable 5-cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import kernels
from .errors import InvariantError, NotTwoVCError
from .graph import Edge, Graph, edge, is_2vc


@dataclass(frozen=True)
class TwoCut:
    u: int
    v: int
    components_after_removal: Tuple[Tuple[int, ...], ...]
    kind: str  # "isolating" or "non-isolating"
    sides: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None

    @property
    def pair(self) -> Edge:
        return (self.u, self.v)


@dataclass(frozen=True)
class RemovableCycle:
    cycle: Tuple[int, int, int, int, int]  # v1..v5 with deg(v1) = deg(v3) = 2
    degree2_vertices: Tuple[int, ...]
    removable_edge: Edge


def _require_2vc(g: Graph) -> None:
    if not is_2vc(g):
        raise NotTwoVCError("graph is not 2-vertex-connected")


def cut_pairs(g: Graph) -> List[Edge]:
    """Vertex pairs whose removal disconnects a 2VC graph, sorted."""
    return list(kernels.two_vertex_cuts(g.n, [list(a) for a in g.adj]))


def classify_cut(g: Graph, u: int, v: int) -> TwoCut:
    comps = tuple(tuple(c) for c in g.induced_components((u, v)))
    isolating = len(comps) == 2 and min(len(c) for c in comps) == 1
    return TwoCut(u, v, comps, "isolating" if isolating else "non-isolating")


def two_cuts(g: Graph) -> List[TwoCut]:
    """All 2-vertex-cuts of a 2VC graph, sorted by vertex pair."""
    return [classify_cut(g, u, v) for u, v in cut_pairs(g)]


def find_irrelevant_edge(g: Graph, pairs: Optional[List[Edge]] = None) -> Optional[Edge]:
    _require_2vc(g)
    for u, v in cut_pairs(g) if pairs is None else pairs:
        if g.has_edge(u, v):
            return (u, v)
    return None


def _split_sides(comps, total):
    """Group the components into two sides of at least 2 vertices each."""
    for order in (comps, sorted(comps, key=lambda c: (len(c), c[0]))):
        acc = []
        for c in order[:-1]:
            acc.extend(c)
            if len(acc) >= 2 and total - len(acc) >= 2:
                left = tuple(sorted(acc))
                right = tuple(sorted(v for c2 in comps for v in c2 if v not in set(acc)))
                return left, right
    return None


def find_non_isolating_cut(g: Graph, pairs: Optional[List[Edge]] = None) -> Optional[TwoCut]:
    """Lexicographically smallest non-isolating cut with its sides (V1, V2).

    ``|V1| <= |V2|``; equal sizes put the side holding the smallest vertex first.
    """
    _require_2vc(g)
    for u, v in cut_pairs(g) if pairs is None else pairs:
        c = classify_cut(g, u, v)
        if c.kind != "non-isolating":
            continue
        total = sum(len(x) for x in c.components_after_removal)
        sides = _split_sides(list(c.components_after_removal), total)
        if sides is None:
            continue  # too few vertices for two sides of size >= 2
        a, b = sides
        if (len(b), b[0]) < (len(a), a[0]):
            a, b = b, a
        return TwoCut(c.u, c.v, c.components_after_removal, c.kind, (a, b))
    return None


def removable_cycles(g: Graph) -> List[RemovableCycle]:
    """5-cycles with two degree-2 vertices, each in canonical labelling.

    Only cycles through a degree-2 vertex can qualify, so the scan starts from
    those vertices instead of enumerating all 5-cycles.
    """
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    seen = set()
    out = []
    for a in deg2:
        x, y = g.adj[a]
        for p in g.adj[x]:
            if p in (a, y):
                continue
            for q in g.adj[y]:
                if q in (a, x, p) or not g.has_edge(p, q):
                    continue
                cyc = (a, x, p, q, y)
                key = frozenset(edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
                if key in seen:
                    continue
                seen.add(key)
                twos = [v for v in cyc if g.degree(v) == 2]
                if len(twos) < 2:
                    continue
                out.append(_canonical_cycle(cyc, twos))
    return out


def _canonical_cycle(cyc, twos) -> RemovableCycle:
    if len(twos) > 2:
        raise InvariantError(f"5-cycle {cyc} has {len(twos)} degree-2 vertices")
    i, j = cyc.index(twos[0]), cyc.index(twos[1])
    if (j - i) % 5 in (1, 4):
        raise InvariantError(f"5-cycle {cyc} has adjacent degree-2 vertices {twos}")
    # rotate/reflect so that v1, v3 are the degree-2 vertices
    if (j - i) % 5 == 2:
        start, step = i, 1
    else:
        start, step = j, 1
    v = tuple(cyc[(start + step * k) % 5] for k in range(5))
    return RemovableCycle(v, tuple(sorted(twos)), edge(v[3], v[4]))


def find_removable_5cycle(g: Graph) -> Optional[RemovableCycle]:
    _require_2vc(g)
    if g.n < 6:
        raise InvariantError("removable 5-cycles need at least 6 vertices")
    cycles = removable_cycles(g)
    return cycles[0] if cycles else None


@dataclass(frozen=True)
class StructureReport:
    structured: bool
    violation: Optional[str] = None  # "irrelevant" | "non-isolating" | "removable"
    witness: object = None

    def __bool__(self) -> bool:
        return self.structured


def is_structured(g: Graph) -> StructureReport:
    pairs = cut_pairs(g) if is_2vc(g) else None
    e = find_irrelevant_edge(g, pairs)
    if e is not None:
        return StructureReport(False, "irrelevant", e)
    cut = find_non_isolating_cut(g, pairs)
    if cut is not None:
        return StructureReport(False, "non-isolating", cut)
    if g.n >= 6:
        cyc = find_removable_5cycle(g)
        if cyc is not None:
            return StructureReport(False, "removable", cyc)
    return StructureReport(True)
