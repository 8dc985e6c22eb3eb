"""Moves: certified rewrites of the working edge set.

Every rewriting rule produces ``Move`` candidates.  A
``Rewriter`` applies a candidate only if the result is a canonical
2-edge-cover, the cost does not go up, and the phase's progress measure
strictly improves; otherwise the candidate is rejected and the next one is
tried.  Every applied move is logged with its exact cost delta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, FrozenSet, Iterable, List, Optional, Tuple

from .cover import is_canonical, pendant_host
from .credits import ledger_of, trace_line
from .errors import InvariantError
from .graph import Decomposition, Edge, EdgeSet, Graph, decompose_edges, edge


@dataclass(frozen=True)
class Move:
    rule: str
    added: FrozenSet[Edge]
    removed: FrozenSet[Edge] = frozenset()
    witness: Any = field(default=None, compare=False)

    @classmethod
    def of(cls, rule: str, added: Iterable = (), removed: Iterable = (), witness=None) -> "Move":
        return cls(rule, frozenset(edge(*e) for e in added), frozenset(edge(*e) for e in removed), witness)


@dataclass(frozen=True)
class MoveRecord:
    rule: str
    phase: str
    added: Tuple[Edge, ...]
    removed: Tuple[Edge, ...]
    cost_before: Fraction
    cost_after: Fraction
    measure_before: tuple
    measure_after: tuple

    @property
    def delta(self) -> Fraction:
        return self.cost_before - self.cost_after

    def line(self) -> str:
        return trace_line(self.rule, len(self.added), len(self.removed), self.cost_before, self.cost_after)


PHASES = ("small", "complex", "pendant", "glue")


def progress_measure(phase: str, d: Decomposition) -> tuple:
    if phase == "complex":
        complex_count = sum(1 for c in d.components if c.is_complex)
        return complex_count, sum(len(c.blocks) + len(c.bridges) for c in d.components)
    return (len(d.components),)


class Rewriter:
    """The working edge set ``S`` with its decomposition, cost and move log."""

    def __init__(self, s: EdgeSet, log: Optional[List[MoveRecord]] = None):
        self.graph: Graph = s.graph
        self.edges = set(s.edges)
        self.log = log if log is not None else []
        self.rejected = 0
        self._refresh()

    def _refresh(self) -> None:
        self.d = decompose_edges(self.edges)
        self.cost = ledger_of(len(self.edges), self.d).cost

    @property
    def edge_set(self) -> EdgeSet:
        return EdgeSet(self.graph, frozenset(self.edges))

    def comp(self, v: int):
        return self.d.components[self.d.comp_of[v]]

    def comp_index(self, v: int) -> int:
        return self.d.comp_of[v]

    def evaluate(self, move: Move, phase: str):
        """(edges, decomposition, cost, before, after), or a rejection reason string."""
        if not move.removed <= self.edges or move.added & self.edges:
            return "removes an edge outside S or adds one already in S"
        if not move.added <= self.graph.edges:
            return "adds a non-edge"
        new = (self.edges - move.removed) | move.added
        deg = [0] * self.graph.n
        for u, v in new:
            deg[u] += 1
            deg[v] += 1
        if min(deg) < 2:
            return "not a 2-edge-cover"
        d = decompose_edges(new)
        if not is_canonical(None, d):
            return "not canonical"
        c = ledger_of(len(new), d).cost
        if c > self.cost:
            return f"cost rises from {self.cost} to {c}"
        before, after = progress_measure(phase, self.d), progress_measure(phase, d)
        if not after < before:
            return f"no progress: {before} -> {after}"
        if phase == "complex":
            if len(d.components) > len(self.d.components):
                return "creates a component"
            if not set(d.bridges) <= set(self.d.bridges):
                return "creates a bridge"
            for comp in d.components:
                if comp.is_small and pendant_host(self.graph, d, comp) is None:
                    return "leaves a small component that is not a pendant 4-cycle"
        return new, d, c, before, after

    def apply(self, move: Move, phase: str) -> bool:
        res = self.evaluate(move, phase)
        if isinstance(res, str):
            self.rejected += 1
            return False
        new, d, c, before, after = res
        self.log.append(
            MoveRecord(move.rule, phase, tuple(sorted(move.added)), tuple(sorted(move.removed)), self.cost, c, before, after)
        )
        self.edges = new
        self.d = d
        self.cost = c
        return True

    def apply_first(self, candidates: Iterable[Move], phase: str, what: str) -> Move:
        """Apply the first valid candidate; a defect if none is valid."""
        reasons = []
        for mv in candidates:
            if self.apply(mv, phase):
                return mv
            if len(reasons) < 8:
                reasons.append(f"{mv.rule}: {self.evaluate(mv, phase)}")
        raise InvariantError(
            f"no valid move found for {what}; S={sorted(self.edges)}; rejected: " + "; ".join(reasons)
        )
