"""Maximum-cardinality matching in general graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet

from . import kernels
from .graph import Edge, Graph, GraphError, edge


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[Edge]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u in seen or v in seen:
                raise GraphError(f"edges of a matching share vertex {u if u in seen else v}")
            seen.update((u, v))

    def __len__(self) -> int:
        return len(self.edges)

    def mate(self, v: int):
        for a, b in self.edges:
            if a == v:
                return b
            if b == v:
                return a
        return None


def maximum_matching(g: Graph) -> Matching:
    """Blossom matching on ``g``; deterministic for a given graph."""
    mate = kernels.max_matching(g.n, [list(a) for a in g.adj])
    return Matching(frozenset(edge(v, w) for v, w in enumerate(mate) if w > v))


def bipartite_matching(pairs) -> Matching:
    """Maximum matching of a bipartite edge list given as ``(left, right)`` pairs.

    Augmenting paths, left vertices in sorted order.  Used for crossing-edge
    matchings where the sides are known.
    """
    pairs = sorted(set(pairs))
    nbrs = {}
    for a, b in pairs:
        nbrs.setdefault(a, []).append(b)
    match_r = {}

    def augment(a, seen):
        for b in nbrs[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in match_r or augment(match_r[b], seen):
                match_r[b] = a
                return True
        return False

    for a in sorted(nbrs):
        augment(a, set())
    return Matching(frozenset(edge(a, b) for b, a in match_r.items()))
