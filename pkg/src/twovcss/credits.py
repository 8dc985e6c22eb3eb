"""Credit scheme and cost.

Small component: |E(C)|/3.  Large component: 1.  Block: 1.  Bridge: 1/4.
cost(S) = |S| + cr(S), all in exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import InvariantError
from .graph import Decomposition, EdgeSet, decompose

THIRD = Fraction(1, 3)
QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class CreditLedger:
    size: int
    component_credits: Tuple[Fraction, ...]
    block_credits: int
    bridge_credits: Fraction

    @property
    def cr(self) -> Fraction:
        return sum(self.component_credits, Fraction(0)) + self.block_credits + self.bridge_credits

    @property
    def cost(self) -> Fraction:
        return self.size + self.cr


def ledger(s: EdgeSet, d: Optional[Decomposition] = None) -> CreditLedger:
    if not s.is_2_edge_cover():
        raise InvariantError("credits are defined for 2-edge-covers only")
    return ledger_of(len(s), d or decompose(s))


def ledger_of(size: int, d: Decomposition) -> CreditLedger:
    comp = []
    blocks = 0
    bridges = 0
    for c in d.components:
        if c.is_small:
            comp.append(Fraction(len(c.edges), 3))
        else:
            comp.append(Fraction(1))
            blocks += len(c.blocks)
            bridges += len(c.bridges)
    return CreditLedger(size, tuple(comp), blocks, bridges * QUARTER)


def cost(s: EdgeSet) -> Fraction:
    return ledger(s).cost


def check_initial_bound(h: EdgeSet) -> Fraction:
    """Assert cost(h) <= 4/3 |h|; returns cost(h)."""
    d = decompose(h)
    c = ledger(h, d).cost
    if c > Fraction(4, 3) * len(h):
        worst = max(
            d.components,
            key=lambda comp: (Fraction(len(comp.edges), 3) if comp.is_small else 1 + len(comp.blocks) + QUARTER * len(comp.bridges))
            - Fraction(len(comp.edges), 3),
        )
        raise InvariantError(
            f"initial cost {c} exceeds 4/3*|H| = {Fraction(4, 3) * len(h)}; "
            f"worst component has vertices {list(worst.vertices)}"
        )
    return c


def certify_move(before: EdgeSet, after: EdgeSet) -> Fraction:
    """cost(before) - cost(after); callers require it to be non-negative."""
    return cost(before) - cost(after)


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def trace_line(rule: str, added: int, removed: int, before: Fraction, after: Fraction) -> str:
    return f"move={rule} added={added} removed={removed} cost_before={fmt(before)} cost_after={fmt(after)}"
