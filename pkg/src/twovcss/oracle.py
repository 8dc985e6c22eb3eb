"""Exact exponential-time references.

These are the ground truth for tests: optimal 2VCSS, optimal 2-edge-cover,
maximum matching, plus naive enumerators for 2-cuts, blocks and nice cycles.
Exceeding a budget raises ``BudgetExceeded``; it never yields a wrong answer.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from . import kernels
from .errors import BudgetExceeded, NotTwoVCError
from .graph import Edge, EdgeSet, Graph, adjacency, components, edge, is_2vc
from .matching import Matching


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 8
    max_nodes: int = 2_000_000
    deadline_s: Optional[float] = None

    def check(self, g: Graph) -> None:
        if g.n > self.max_vertices:
            raise BudgetExceeded(f"n={g.n} exceeds the oracle limit of {self.max_vertices} vertices")

    def deadline(self):
        return None if self.deadline_s is None else time.monotonic() + self.deadline_s


COVER_BUDGET = OracleBudget(max_vertices=10)


def exact_2vcss(g: Graph, b: OracleBudget = OracleBudget()) -> EdgeSet:
    b.check(g)
    if not is_2vc(g):
        raise NotTwoVCError("graph is not 2-vertex-connected")
    es = g.sorted_edges()
    idx = kernels.exact_2vcss(g.n, es, b.max_nodes, b.deadline())
    return EdgeSet(g, frozenset(es[i] for i in idx))


def opt(g: Graph, b: OracleBudget = OracleBudget()) -> int:
    return len(exact_2vcss(g, b))


def exact_min_2edge_cover(g: Graph, b: OracleBudget = COVER_BUDGET) -> EdgeSet:
    b.check(g)
    if any(g.degree(v) < 2 for v in range(g.n)):
        raise ValueError("some vertex has degree below 2")
    es = g.sorted_edges()
    idx = kernels.exact_min_2edge_cover(g.n, es, b.max_nodes, b.deadline())
    return EdgeSet(g, frozenset(es[i] for i in idx))


def exact_max_matching(g: Graph, b: OracleBudget = COVER_BUDGET) -> Matching:
    b.check(g)
    es = g.sorted_edges()
    idx = kernels.exact_max_matching(g.n, es, b.max_nodes, b.deadline())
    return Matching(frozenset(es[i] for i in idx))


def subset_2vcss_size(g: Graph, max_subsets: int = 5_000_000) -> int:
    """Optimum by plain enumeration of edge subsets in increasing size.

    Slow and independent of the branch and bound; used to cross-check it.
    """
    es = g.sorted_edges()
    checked = 0
    for k in range(g.n, len(es) + 1):
        for combo in itertools.combinations(es, k):
            checked += 1
            if checked > max_subsets:
                raise BudgetExceeded("subset enumeration budget exhausted")
            deg = [0] * g.n
            for u, v in combo:
                deg[u] += 1
                deg[v] += 1
            if min(deg) < 2:
                continue
            if is_2vc(EdgeSet(g, frozenset(combo))):
                return k
    raise NotTwoVCError("graph is not 2-vertex-connected")


# --- naive structure enumerators --------------------------------------------


def naive_two_cuts(g: Graph) -> Dict[Edge, List[List[int]]]:
    """Every vertex pair whose removal leaves at least two components."""
    out = {}
    for u, v in itertools.combinations(range(g.n), 2):
        comps = g.induced_components((u, v))
        if len(comps) >= 2:
            out[(u, v)] = comps
    return out


def naive_irrelevant_edges(g: Graph) -> List[Edge]:
    return sorted(e for e in naive_two_cuts(g) if g.has_edge(*e))


def naive_non_isolating_cuts(g: Graph) -> List[Edge]:
    out = []
    for pair, comps in naive_two_cuts(g).items():
        isolating = len(comps) == 2 and min(len(c) for c in comps) == 1
        if not isolating:
            out.append(pair)
    return sorted(out)


def naive_blocks(edges) -> List[frozenset]:
    """Maximal vertex sets (>= 3 vertices) inducing a 2VC subgraph of ``edges``."""
    edges = frozenset(edges)
    verts = sorted({x for e in edges for x in e})
    found: List[frozenset] = []
    for k in range(len(verts), 2, -1):
        for sub in itertools.combinations(verts, k):
            s = frozenset(sub)
            if any(s <= f for f in found):
                continue
            inner = [e for e in edges if e[0] in s and e[1] in s]
            adj = adjacency(inner)
            if len(adj) != k or len(components(s, lambda v: adj[v])) != 1:
                continue
            if all(len(components(s - {x}, lambda v: [w for w in adj[v] if w != x])) == 1 for x in s):
                found.append(s)
    return sorted(found, key=sorted)


# --- nice cycles ------------------------------------------------------------


def is_nice_cycle(g: Graph, parts: Sequence[Sequence[int]], cycle: Sequence[Edge]) -> bool:
    """Both conditions of a nice cycle, checked literally."""
    part_of = {}
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    if len(cycle) < 2 or len(set(map(tuple, cycle))) != len(cycle):
        return False
    incident: Dict[int, List[int]] = {}
    for u, v in cycle:
        if not g.has_edge(u, v) or part_of[u] == part_of[v]:
            return False
        incident.setdefault(part_of[u], []).append(u)
        incident.setdefault(part_of[v], []).append(v)
    # one cycle in the contraction: every touched part has degree 2 and the
    # touched parts are connected through the cycle edges
    if any(len(ends) != 2 for ends in incident.values()):
        return False
    cadj = adjacency([edge(part_of[u], part_of[v]) for u, v in cycle])
    if len(cycle) == 2:
        if len(incident) != 2:
            return False
    elif len(components(incident.keys(), lambda x: cadj.get(x, []))) != 1:
        return False
    for i, (a, b) in incident.items():
        if len(parts[i]) >= 2 and a == b:
            return False
    return True


def exhaustive_nice_cycle(g: Graph, parts: Sequence[Sequence[int]], max_states: int = 2_000_000):
    """Search every cycle of the contracted graph; returns a nice cycle or None.

    States are (current part, entry vertex).  Parts are visited at most once,
    and the cycle closes back into the start part at a vertex different from
    where it left (unless that part is a single vertex).
    """
    part_of = {v: i for i, p in enumerate(parts) for v in p}
    k = len(parts)
    cross = {}
    for u, v in g.sorted_edges():
        if part_of[u] != part_of[v]:
            cross.setdefault(u, []).append(v)
            cross.setdefault(v, []).append(u)
    counter = [0]

    def ok(part, a, b):
        return a != b or len(parts[part]) == 1

    for start in range(k):
        for s_out in sorted(parts[start]):
            for s_in in cross.get(s_out, []):
                # first edge s_out -> s_in enters part_of[s_in]
                path = [edge(s_out, s_in)]
                visited = {start, part_of[s_in]}
                res = _extend(g, parts, part_of, cross, start, s_out, s_in, path, visited, ok, counter, max_states)
                if res is not None:
                    return res
    return None


def _extend(g, parts, part_of, cross, start, s_out, entry, path, visited, ok, counter, max_states):
    counter[0] += 1
    if counter[0] > max_states:
        raise BudgetExceeded("nice-cycle search exhausted its state budget")
    cur = part_of[entry]
    for out in sorted(parts[cur]):
        if not ok(cur, entry, out):
            continue
        for nxt in cross.get(out, []):
            e = edge(out, nxt)
            if e in path:
                continue
            p = part_of[nxt]
            if p == start:
                if ok(start, s_out, nxt):
                    return path + [e]
                continue
            if p in visited:
                continue
            visited.add(p)
            res = _extend(g, parts, part_of, cross, start, s_out, nxt, path + [e], visited, ok, counter, max_states)
            visited.discard(p)
            if res is not None:
                return res
    return None
