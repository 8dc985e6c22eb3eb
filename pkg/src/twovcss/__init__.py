"""4/3-approximation for the minimum 2-vertex-connected spanning subgraph problem.

``solve`` runs the whole pipeline on a 2VC graph; the ``oracle`` module holds
the exact references used to check it.
"""

from .errors import BudgetExceeded, InvariantError, NotTwoVCError, ParseError, TwoVCError
from .graph import EdgeSet, Graph, cycle_graph, complete_graph, decompose, is_2vc, petersen_graph, wheel_graph
from .pipeline import SolveResult, bound, core_solve, solve
from .reduction import ReductionConfig, red

__all__ = [
    "BudgetExceeded",
    "EdgeSet",
    "Graph",
    "InvariantError",
    "NotTwoVCError",
    "ParseError",
    "ReductionConfig",
    "SolveResult",
    "TwoVCError",
    "bound",
    "complete_graph",
    "core_solve",
    "cycle_graph",
    "decompose",
    "is_2vc",
    "petersen_graph",
    "red",
    "solve",
    "wheel_graph",
]
