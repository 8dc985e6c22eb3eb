"""Reduction from arbitrary 2VC graphs to structured ones.

``red`` brute-forces tiny graphs, deletes irrelevant edges, splits on a
non-isolating 2-cut (solving both contracted sides and stitching the two
solutions), deletes the removable edge of a removable 5-cycle, and hands
whatever is left, now structured, to the core solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Optional

from .errors import BudgetExceeded, InvariantError, NotTwoVCError
from .graph import Edge, EdgeSet, Graph, contract, edge, is_2vc
from .oracle import OracleBudget, exact_2vcss
from .structure import TwoCut, cut_pairs, find_irrelevant_edge, find_non_isolating_cut, find_removable_5cycle

Core = Callable[[Graph], EdgeSet]


@dataclass(frozen=True)
class ReductionConfig:
    alpha: Fraction = Fraction(4, 3)
    recursion_budget: Optional[int] = None  # None: derived from the input size

    def __post_init__(self):
        a = Fraction(self.alpha)
        object.__setattr__(self, "alpha", a)
        if not (1 < a <= Fraction(3, 2)):
            raise ValueError(f"alpha must lie in (1, 3/2], got {a}")

    @property
    def small_threshold(self) -> int:
        return max(6, math.ceil(2 / (self.alpha - 1)))

    def budget_for(self, g: Graph) -> int:
        if self.recursion_budget is not None:
            return self.recursion_budget
        return 4 * (g.n * g.n + g.m) + 16


@dataclass
class RedStats:
    calls: int = 0
    splits: int = 0
    irrelevant: int = 0
    removable: int = 0
    brute: int = 0
    core: int = 0


@dataclass(frozen=True)
class StitchWitness:
    cut: TwoCut
    g1: Graph
    g2: Graph
    back1: Dict[int, int]  # vertex of g1 -> vertex of g
    back2: Dict[int, int]
    h1: EdgeSet
    h2: EdgeSet
    e1: FrozenSet[Edge]
    e2: FrozenSet[Edge]

    def stitched(self, g: Graph) -> EdgeSet:
        out = set()
        for h, e, back in ((self.h1, self.e1, self.back1), (self.h2, self.e2, self.back2)):
            for a, b in h.edges - e:
                out.add(edge(back[a], back[b]))
        return EdgeSet(g, frozenset(out))


def brute_force_small(g: Graph) -> EdgeSet:
    """Exact solution; the oracle's node budget bounds the work."""
    if not is_2vc(g):
        raise NotTwoVCError("graph is not 2-vertex-connected")
    return exact_2vcss(g, OracleBudget(max_vertices=max(8, g.n)))


def _side(g: Graph, keep, other):
    gc, mapping = contract(g, other)
    back = {mapping[v]: v for v in keep}
    return gc, back


def split_on_cut(g: Graph, cut: TwoCut, solve: Core) -> StitchWitness:
    if cut.kind != "non-isolating" or cut.sides is None:
        raise InvariantError(f"cut {cut.pair} is not a non-isolating cut with sides")
    v1, v2 = cut.sides
    if not 2 <= len(v1) <= len(v2):
        raise InvariantError(f"cut sides have sizes {len(v1)}, {len(v2)}")
    if g.has_edge(cut.u, cut.v):
        raise InvariantError("split requires the cut pair to be non-adjacent")
    g1, back1 = _side(g, set(v1) | {cut.u, cut.v}, v2)
    g2, back2 = _side(g, set(v2) | {cut.u, cut.v}, v1)
    h1, h2 = solve(g1), solve(g2)
    e1 = frozenset(e for e in h1.edges if g1.n - 1 in e)
    e2 = frozenset(e for e in h2.edges if g2.n - 1 in e)
    if len(e1) != 2 or len(e2) != 2:
        raise InvariantError(f"contracted vertex has degree {len(e1)}/{len(e2)} in the side solutions")
    return StitchWitness(cut, g1, g2, back1, back2, h1, h2, e1, e2)


def red(g: Graph, cfg: ReductionConfig = ReductionConfig(), core: Optional[Core] = None,
        stats: Optional[RedStats] = None, _budget: Optional[list] = None) -> EdgeSet:
    """A 2VC spanning subgraph of ``g`` within max{opt, alpha*opt - 2}."""
    if core is None:
        raise ValueError("red needs a core solver for structured graphs")
    if not is_2vc(g):
        raise NotTwoVCError("graph is not 2-vertex-connected")
    stats = stats if stats is not None else RedStats()
    budget = _budget if _budget is not None else [cfg.budget_for(g)]
    top = g
    while True:
        stats.calls += 1
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("reduction recursion budget exhausted")
        if g.n < cfg.small_threshold:
            stats.brute += 1
            return EdgeSet(top, brute_force_small(g).edges)
        cuts = cut_pairs(g)
        e = find_irrelevant_edge(g, cuts)
        if e is not None:
            stats.irrelevant += 1
            g = g.without_edges([e])
            continue
        cut = find_non_isolating_cut(g, cuts)
        if cut is not None:
            stats.splits += 1
            w = split_on_cut(g, cut, lambda sub: red(sub, cfg, core, stats, budget))
            return EdgeSet(top, w.stitched(g).edges)
        rc = find_removable_5cycle(g)
        if rc is not None:
            stats.removable += 1
            g = g.without_edges([rc.removable_edge])
            continue
        stats.core += 1
        return EdgeSet(top, core(g).edges)
