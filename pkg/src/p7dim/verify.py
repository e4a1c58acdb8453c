"""Certificate checks for candidate edge sets and the mandatory-edge reduction."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import INF, Graph


class NotInducedMatching(ValueError):
    """Mandatory edges intersect or lie at distance one."""


@dataclass(frozen=True)
class MatchingSet:
    edge_ids: frozenset[int]
    total_weight: float

    @classmethod
    def of(cls, g: Graph, edge_ids: Iterable[int]) -> "MatchingSet":
        ids = frozenset(edge_ids)
        return cls(ids, matching_weight(g, ids))

    def edges(self, g: Graph) -> list[tuple[int, int]]:
        return sorted(g.endpoints(e) for e in self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


def _ids(s) -> Iterable[int]:
    return s.edge_ids if isinstance(s, MatchingSet) else s


def _appearances(g: Graph, ids: Iterable[int]) -> list[int]:
    count = [0] * g.n
    for e in ids:
        u, v, _ = g.edges[e]
        count[u] += 1
        count[v] += 1
    return count


def check_induced_matching(g: Graph, s) -> bool:
    ids = set(_ids(s))
    count = _appearances(g, ids)
    if any(c >= 2 for c in count):
        return False
    for e, (u, v, _) in enumerate(g.edges):
        if e not in ids and count[u] and count[v]:
            return False
    return True


def check_dim(g: Graph, s) -> bool:
    """Linear-time d.i.m. test by vertex appearance counts."""
    ids = set(_ids(s))
    count = _appearances(g, ids)
    if any(c >= 2 for c in count):
        return False
    for e, (u, v, _) in enumerate(g.edges):
        if count[u] and count[v]:
            if e not in ids:
                return False
        elif not count[u] and not count[v]:
            return False
    return True


def dim_violation(g: Graph, s) -> tuple[str, tuple[int, ...]] | None:
    """First reason ``s`` is not a d.i.m., or None.

    Reasons: ``"intersecting"`` (shared vertex), ``"distance-1"`` (an edge joins
    two matched vertices of different members), ``"undominated"`` (edge with no
    matched endpoint).
    """
    ids = set(_ids(s))
    owner: dict[int, int] = {}
    for e in sorted(ids):
        for x in g.endpoints(e):
            if x in owner:
                return "intersecting", (x,)
            owner[x] = e
    for e, (u, v, _) in enumerate(g.edges):
        if u in owner and v in owner and e not in ids:
            return "distance-1", (u, v)
    for e, (u, v, _) in enumerate(g.edges):
        if u not in owner and v not in owner:
            return "undominated", (u, v)
    return None


def matching_weight(g: Graph, s) -> float:
    total = 0.0
    for e in _ids(s):
        total += g.edges[e][2]
    return total


@dataclass
class ReductionResult:
    reduced_graph: Graph
    red_vertices: frozenset[int]  # ids in the reduced graph
    infinity_edges: frozenset[int]  # edge ids in the reduced graph
    vertex_map: dict[int, int]  # host id -> reduced id

    @property
    def old_of(self) -> list[int]:
        inv = [0] * self.reduced_graph.n
        for old, new in self.vertex_map.items():
            inv[new] = old
        return inv


def reduce(g: Graph, mandatory) -> ReductionResult:
    """Delete the endpoints of mandatory edges; edges next to them become infinite."""
    ids = set(_ids(mandatory))
    if not check_induced_matching(g, ids):
        raise NotInducedMatching(sorted(ids))
    deleted = set()
    for e in ids:
        deleted.update(g.endpoints(e))
    red_old = set()
    for x in deleted:
        for w in g.adj[x]:
            if w not in deleted:
                red_old.add(w)
    keep = [v for v in range(g.n) if v not in deleted]
    vmap = {v: i for i, v in enumerate(keep)}
    edges = []
    inf_edges = []
    for u, v, w in g.edges:
        if u in deleted or v in deleted:
            continue
        if u in red_old or v in red_old:
            inf_edges.append(len(edges))
            w = INF
        edges.append((vmap[u], vmap[v], w))
    return ReductionResult(
        Graph(len(keep), edges),
        frozenset(vmap[v] for v in red_old),
        frozenset(inf_edges),
        vmap,
    )
