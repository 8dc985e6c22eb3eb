"""The end-to-end solver: reduction around the core algorithm for structured graphs.

The core algorithm computes a minimum 2-edge-cover ``H``, canonicalizes it,
then rewrites it phase by phase (small components, complex components,
pendant 4-cycles, gluing) without ever raising the cost.  Since the final
2VC solution has cost |S| + 2 and the initial cost is at most 4/3 |H|, the
output satisfies |S| <= max(|H|, 4/3 |H| - 2).
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .complex_components import run_complex_phase, run_pendant_phase
from .cover import canonicalize, min_2edge_cover
from .credits import check_initial_bound
from .errors import InvariantError, NotTwoVCError
from .gluing import run_glue_phase
from .graph import EdgeSet, Graph, is_2vc
from .moves import PHASES, MoveRecord, Rewriter
from .reduction import ReductionConfig, RedStats, red
from .small_components import run_small_phase


def bound(h: int, alpha: Fraction = Fraction(4, 3)) -> Fraction:
    """max(h, alpha*h - 2) as an exact rational."""
    return max(Fraction(h), alpha * h - 2)


@dataclass
class CoreRun:
    n: int
    h_size: int
    s_size: int
    initial_cost: Fraction
    moves: Dict[str, int]


@dataclass
class SolveResult:
    graph: Graph
    solution: EdgeSet
    h_size: int  # minimum 2-edge-cover of the input: a lower bound on opt
    core_runs: List[CoreRun] = field(default_factory=list)
    log: List[MoveRecord] = field(default_factory=list)
    red_stats: RedStats = field(default_factory=RedStats)
    generic_fallbacks: int = 0

    @property
    def size(self) -> int:
        return len(self.solution)

    @property
    def phase_counts(self) -> Dict[str, int]:
        out = {p: 0 for p in PHASES}
        for r in self.log:
            out[r.phase] += 1
        return out

    def trace_lines(self) -> List[str]:
        return [r.line() for r in self.log]

    @property
    def digest(self) -> str:
        return hashlib.sha256("\n".join(self.trace_lines()).encode()).hexdigest()


def core_solve(g: Graph, log: Optional[List[MoveRecord]] = None, runs: Optional[List[CoreRun]] = None,
               stats: Optional[dict] = None) -> EdgeSet:
    """The 4/3 core for structured graphs; asserts its own guarantee."""
    log = log if log is not None else []
    h = min_2edge_cover(g)
    start = len(log)
    if len(h) <= 5 and is_2vc(h):
        out = h
        c0 = Fraction(len(h) + 2)
    else:
        s = canonicalize(h)
        c0 = check_initial_bound(s)
        rw = Rewriter(s, log)
        run_small_phase(rw)
        run_complex_phase(rw, stats)
        run_pendant_phase(rw)
        run_glue_phase(rw)
        out = rw.edge_set
    for r in log[start:]:
        if r.cost_after > r.cost_before:
            raise InvariantError(f"move {r.rule} raised the cost: {r.line()}")
    if not is_2vc(out):
        raise InvariantError("core output is not a spanning 2VC subgraph")
    if len(out) > bound(len(h)):
        raise InvariantError(f"|S|={len(out)} exceeds max(|H|, 4/3|H|-2) for |H|={len(h)}")
    if runs is not None:
        moves = {p: 0 for p in PHASES}
        for r in log[start:]:
            moves[r.phase] += 1
        runs.append(CoreRun(g.n, len(h), len(out), c0, moves))
    return out


def solve(g: Graph, alpha=Fraction(4, 3)) -> SolveResult:
    if not is_2vc(g):
        raise NotTwoVCError("input graph is not 2-vertex-connected")
    cfg = ReductionConfig(Fraction(alpha))
    log: List[MoveRecord] = []
    runs: List[CoreRun] = []
    stats = RedStats()
    fb: dict = {}
    sol = red(g, cfg, lambda sub: core_solve(sub, log, runs, fb), stats)
    if not is_2vc(sol):
        raise InvariantError("solution is not a spanning 2VC subgraph")
    res = SolveResult(g, sol, len(min_2edge_cover(g)), runs, log, stats, fb.get("generic", 0))
    return res
