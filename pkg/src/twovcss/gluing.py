"""Nice cycles over a vertex partition, and merging 2VC components with them.

A nice cycle w.r.t. a partition is a set of crossing edges forming one cycle
(length >= 2) after every part is collapsed, such that the two cycle edges at
a part with two or more vertices meet it at distinct vertices.

Construction: walk a BFS over states ``(v, in)`` / ``(v, out)``.  Entering a
part at ``x`` we may leave it from any other vertex of the same part.  The
search leaves a part ``A`` along a fixed edge at ``a`` and stops on re-entering ``A``
at a vertex other than ``a``.  The closed walk may visit a part twice; the
innermost such repetition either is a nice cycle on its own or can be
shortcut.  Every start (part, first edge) is tried within a |V|^2 budget;
the exhaustive search of the oracle is the last resort.  Whatever is returned
has passed the predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BudgetExceeded, InvariantError
from .graph import Edge, EdgeSet, Graph, edge
from .moves import Move, Rewriter
from .oracle import exhaustive_nice_cycle, is_nice_cycle


@dataclass(frozen=True)
class Partition:
    parts: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, parts: Sequence[Sequence[int]]) -> "Partition":
        ps = tuple(tuple(sorted(p)) for p in parts)
        seen = [v for p in ps for v in p]
        if any(not p for p in ps):
            raise ValueError("empty part")
        if sorted(seen) != list(range(n)):
            raise ValueError("parts must be disjoint and cover every vertex")
        return cls(ps)

    def index(self) -> Dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class NiceCycle:
    edges: Tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)


# a visit: (part, entry vertex, exit vertex)
Visit = Tuple[int, int, int]


def _walk(g: Graph, parts, part_of, start: int, a: int, first: int) -> Optional[List[Visit]]:
    """Closed walk leaving part ``start`` along ``a first``; None if it cannot return."""
    prev: Dict[tuple, Optional[tuple]] = {(a, 1): None, (first, 0): (a, 1)}
    handled: Dict[int, int] = {}
    queue = [(first, 0)]
    goal = None
    for state in queue:
        v, out = state
        if out:
            for z in g.adj[v]:
                pz = part_of[z]
                if pz == part_of[v] or (z, 0) in prev:
                    continue
                if pz == start:
                    if z == a and (len(parts[start]) > 1 or v == first):
                        continue  # same vertex twice, or straight back along the first edge
                    prev[(z, 0)] = state
                    goal = (z, 0)
                    break
                prev[(z, 0)] = state
                queue.append((z, 0))
            if goal is not None:
                break
        else:
            p = part_of[v]
            if handled.get(p, 0) >= 2:
                continue
            handled[p] = handled.get(p, 0) + 1
            for y in parts[p]:
                if (y == v and len(parts[p]) > 1) or (y, 1) in prev:
                    continue
                prev[(y, 1)] = state
                queue.append((y, 1))
    if goal is None:
        return None
    states = [goal]
    while prev[states[-1]] is not None:
        states.append(prev[states[-1]])
    states.reverse()  # (a,out) (x1,in) (y1,out) ... (goal,in)
    visits = [(start, states[-1][0], a)]
    for i in range(1, len(states) - 1, 2):
        x, y = states[i][0], states[i + 1][0]
        visits.append((part_of[x], x, y))
    return visits


def _repair(visits: List[Visit], parts) -> Optional[List[Visit]]:
    """Remove repeated parts; the result visits each part once, or None."""
    visits = list(visits)
    for _ in range(len(visits) + 1):
        pos: Dict[int, int] = {}
        best = None
        for j, (p, _, _) in enumerate(visits):
            if p in pos and (best is None or j - pos[p] < best[1] - best[0]):
                best = (pos[p], j)
            pos[p] = j
        if best is None:
            return visits
        i, j = best
        p, xi, yi = visits[i]
        _, xj, yj = visits[j]
        single = len(parts[p]) == 1
        if yi != xj or single:
            # the loop between the two visits closes on its own
            return [(p, xj, yi)] + visits[i + 1 : j]
        if xi != yj:
            visits[i : j + 1] = [(p, xi, yj)]
            continue
        return None
    return None


def _edges_of(visits: List[Visit]) -> List[Edge]:
    r = len(visits)
    return [edge(visits[i][2], visits[(i + 1) % r][1]) for i in range(r)]


def nice_cycle(g: Graph, p: Partition) -> NiceCycle:
    """A nice cycle of 2VC ``g`` w.r.t. ``p`` (at least two parts)."""
    if len(p) < 2:
        raise ValueError("a nice cycle needs at least two parts")
    parts = p.parts
    part_of = p.index()
    budget = max(1, g.n * g.n)
    tries = 0
    for start, part in enumerate(parts):
        for a in part:
            for first in g.adj[a]:
                if part_of[first] == start:
                    continue
                tries += 1
                if tries > budget:
                    break
                visits = _walk(g, parts, part_of, start, a, first)
                if visits is None:
                    continue
                fixed = _repair(visits, parts)
                if fixed is None or len(fixed) < 2:
                    continue
                cyc = _edges_of(fixed)
                if is_nice_cycle(g, parts, cyc):
                    return NiceCycle(tuple(cyc))
    try:
        found = exhaustive_nice_cycle(g, parts)
    except BudgetExceeded:
        found = None
    if found is None or not is_nice_cycle(g, parts, found):
        raise InvariantError("no nice cycle found; is the graph 2VC?")
    return NiceCycle(tuple(edge(*e) for e in found))


def glue_step(rw: Rewriter) -> Move:
    d = rw.d
    part = Partition(tuple(tuple(sorted(c.vertices)) for c in d.components))
    n = nice_cycle(rw.graph, part)
    mv = Move.of("glue", n.edges, witness=n)
    if not rw.apply(mv, "glue"):
        raise InvariantError(f"gluing with {list(n.edges)} rejected: {rw.evaluate(mv, 'glue')}")
    return mv


def run_glue_phase(rw: Rewriter) -> int:
    for c in rw.d.components:
        if not (c.is_large and c.is_2vc):
            raise InvariantError("gluing needs every component large and 2VC")
    applied = 0
    start = len(rw.d.components)
    while len(rw.d.components) > 1:
        if applied >= start:
            raise InvariantError("gluing did not converge")
        glue_step(rw)
        applied += 1
    return applied


def glue_components(s: EdgeSet, log=None) -> EdgeSet:
    rw = Rewriter(s, log)
    run_glue_phase(rw)
    return rw.edge_set
