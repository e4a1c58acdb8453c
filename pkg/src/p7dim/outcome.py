"""Solver verdicts."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Union

from .verify import MatchingSet


@dataclass(frozen=True)
class Solved:
    matching: MatchingSet

    @property
    def weight(self) -> float:
        return self.matching.total_weight


@dataclass(frozen=True)
class NoFiniteDim:
    """No dominating induced matching of finite weight (under the P7-free promise).

    ``diagnostic`` optionally carries the obstruction or rejected edge set that
    triggered the verdict.
    """

    diagnostic: Optional[Any] = None


@dataclass(frozen=True)
class NotP7Free:
    witness: tuple[int, ...]


Outcome = Union[Solved, NoFiniteDim, NotP7Free]


def outcome_weight(out: Outcome) -> Optional[float]:
    return out.weight if isinstance(out, Solved) else None
