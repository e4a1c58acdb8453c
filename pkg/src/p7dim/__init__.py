"""Minimum-weight dominating induced matchings in P7-free graphs."""
from .graph import Graph, build_graph
from .outcome import NoFiniteDim, NotP7Free, Outcome, Solved
from .solver import find_odd_cycle_or_p7, solve
from .verify import MatchingSet, check_dim, check_induced_matching, reduce

__all__ = [
    "Graph",
    "MatchingSet",
    "NoFiniteDim",
    "NotP7Free",
    "Outcome",
    "Solved",
    "build_graph",
    "check_dim",
    "check_induced_matching",
    "find_odd_cycle_or_p7",
    "reduce",
    "solve",
]
