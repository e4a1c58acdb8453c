"""Top-level weighted DIM solver with the robust contract.

``solve`` returns Solved (verified d.i.m. of minimum finite weight),
NoFiniteDim, or NotP7Free with a verified induced P7.  NoFiniteDim is exact
when the input is P7-free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .bipartite import (
    bipartite_dim,
    deep_path,
    dh_bipartite_check,
    dh_bipartite_solve,
    resolve_obstruction,
)
from .check_xy import check_xy, p3_witness
from .cograph import cograph_dim, is_cograph
from .graph import (
    Graph,
    bfs_levels,
    bipartition,
    complement_components,
    connected_components,
    is_induced_cycle,
    is_induced_path,
)
from .hom_reduce import Hom1Status, hom1_dim, strip_triangle_leaf_blocks, tr_transform_with_lift
from .modular import maximal_homogeneous_sets
from .outcome import NoFiniteDim, NotP7Free, Outcome, Solved
from .verify import MatchingSet, NotInducedMatching, check_dim, reduce


@dataclass(frozen=True)
class OddCycleWitness:
    kind: str  # "C3", "C5" or "C7"
    vertices: tuple[int, ...]


def _witness_cycle(g: Graph, cyc: Iterable[int]) -> OddCycleWitness:
    cyc = tuple(cyc)
    assert is_induced_cycle(g, cyc), cyc
    return OddCycleWitness(f"C{len(cyc)}", cyc)


def _witness_path(g: Graph, path: Iterable[int]) -> NotP7Free:
    path = tuple(path)
    assert len(path) == 7 and is_induced_path(g, path), path
    return NotP7Free(path)


def find_odd_cycle_or_p7(g: Graph, x: int = 0) -> Union[OddCycleWitness, NotP7Free]:
    """A chordless C3, C5 or C7, or an induced P7, from the BFS levels of ``x``.

    Scans levels upward for the first edge inside a level and closes it
    through parents.
    """
    color, _ = bipartition(g)
    if color is not None:
        raise ValueError("graph is bipartite")
    lv = bfs_levels(g, [x])
    if min(lv.level_of) < 0:
        raise ValueError("graph is disconnected")
    p7 = deep_path(g, lv)
    if p7 is not None:
        return NotP7Free(p7)
    lvl = lv.level_of

    def ups(v: int) -> list[int]:
        return [w for w in g.adj[v] if lvl[w] == lvl[v] - 1]

    def common_up(a: int, b: int) -> Optional[int]:
        nb = g.nbrs[b]
        for c in ups(a):
            if c in nb:
                return c
        return None

    for k in range(1, lv.depth + 1):
        layer = lv.level(k)
        inside = set(layer)
        edge = next(((a, b) for a in layer for b in g.adj[a] if b in inside and a < b), None)
        if edge is None:
            continue
        a, b = edge
        if k == 1:
            return _witness_cycle(g, (x, a, b))
        c = common_up(a, b)
        if c is not None:
            return _witness_cycle(g, (a, b, c))
        a1, b1 = ups(a)[0], ups(b)[0]
        if k == 2:
            return _witness_cycle(g, (x, a1, a, b, b1))
        if k in (3, 4):
            c = common_up(a1, b1)
            if c is not None:
                return _witness_cycle(g, (c, a1, a, b, b1))
            a2 = ups(a1)[0]
            if k == 3:
                b2 = ups(b1)[0]
                return _witness_cycle(g, (x, a2, a1, a, b, b1, b2))
            a3 = ups(a2)[0]
            return _witness_path(g, (x, a3, a2, a1, a, b, b1))
        chain = [a1]
        while lvl[chain[-1]] > 1:
            chain.append(ups(chain[-1])[0])
        return _witness_path(g, [x] + chain[::-1] + [a, b])
    raise AssertionError("non-bipartite graph without an intra-level edge")


# ---------------------------------------------------------------- helpers


def _lift(g: Graph, sub: Graph, old: list[int], ids: Iterable[int]) -> list[int]:
    out = []
    for e in ids:
        a, b = sub.endpoints(e)
        out.append(g.edge_id(old[a], old[b]))
    return out


def _lift_outcome(out: Outcome, old: list[int]) -> Outcome:
    if isinstance(out, NotP7Free):
        return NotP7Free(tuple(old[v] for v in out.witness))
    return out


def _trivial(g: Graph) -> Optional[Outcome]:
    if g.n == 1:
        return Solved(MatchingSet(frozenset(), 0.0))
    if g.n == 2:
        if math.isinf(g.edges[0][2]):
            return NoFiniteDim("single edge of infinite weight")
        return Solved(MatchingSet.of(g, [0]))
    return None


def _best_anchor(g: Graph, anchors: Iterable[tuple[int, int]]) -> Optional[MatchingSet]:
    best: Optional[MatchingSet] = None
    for a, b in anchors:
        if math.isinf(g.edge_weight(a, b)):
            continue
        if p3_witness(g, a, b) is None:
            # true twins are handled by the module step or the cograph branch
            raise AssertionError(f"anchor {a}-{b} is not on a P3")
        res = check_xy(g, a, b)
        if res is not None and (best is None or res[1] < best.total_weight):
            best = res[0]
    return best


def _cycle_edges(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


# ---------------------------------------------------------------- per component


def _solve_reduced_component(c: Graph) -> Outcome:
    """Solve a connected component of the reduced graph (infinite edges allowed)."""
    out = _trivial(c)
    if out is not None:
        return out
    color, _ = bipartition(c)
    if color is not None:
        return bipartite_dim(c)
    if len(complement_components(c)) > 1:
        ok, _ = is_cograph(c)
        return cograph_dim(c, check=False) if ok else NoFiniteDim("join of non-cographs")
    star, old, _ = strip_triangle_leaf_blocks(c)
    star_color, _ = bipartition(star)
    if star_color is None:
        found = find_odd_cycle_or_p7(star)
        if isinstance(found, NotP7Free):
            return _lift_outcome(found, old)
        cyc = tuple(old[v] for v in found.vertices)
        best = _best_anchor(c, _cycle_edges(cyc))
        return Solved(best) if best is not None else NoFiniteDim(("odd cycle", cyc))
    lv = bfs_levels(star, [0])
    p7 = deep_path(star, lv)
    if p7 is not None:
        return _lift_outcome(NotP7Free(p7), old)
    obs = dh_bipartite_check(star, 0)
    if obs is not None:
        if obs.kind != "C6":
            return _lift_outcome(resolve_obstruction(star, obs), old)
        cyc = tuple(old[v] for v in obs.vertices)
        best = _best_anchor(c, _cycle_edges(cyc))
        return Solved(best) if best is not None else NoFiniteDim(("C6", cyc))
    tr, lift = tr_transform_with_lift(c)
    out = dh_bipartite_solve(tr, certified=True)
    if not isinstance(out, Solved):
        return out
    return Solved(MatchingSet.of(c, [lift[e] for e in out.matching.edge_ids]))


def _forced_by_modules(g: Graph) -> Union[set[int], NoFiniteDim]:
    part = maximal_homogeneous_sets(g)
    forced: set[int] = set()
    for H, NH in zip(part.modules, part.outside_neighborhood):
        if len(NH) == 1:
            verdict = hom1_dim(g, H, NH[0])
            if verdict.status is Hom1Status.NO_DIM:
                return NoFiniteDim(("module", tuple(H), verdict.reason))
            forced |= verdict.forced_edges
            continue
        hs = set(H)
        inner = [(v, [w for w in g.adj[v] if w in hs]) for v in H]
        if all(not nb for _, nb in inner):
            continue
        if any(g.has_edge(a, b) for i, a in enumerate(NH) for b in NH[i + 1:]):
            return NoFiniteDim(("module neighborhood not stable", tuple(H)))
        if any(len(nb) != 1 for _, nb in inner):
            return NoFiniteDim(("module is not a union of edges", tuple(H)))
        forced |= {g.edge_id(v, nb[0]) for v, nb in inner}
    return forced


def _solve_connected(g: Graph) -> Outcome:
    out = _trivial(g)
    if out is not None:
        return out
    color, _ = bipartition(g)
    if color is not None:
        return bipartite_dim(g)
    if len(complement_components(g)) > 1:
        ok, _ = is_cograph(g)
        return cograph_dim(g, check=False) if ok else NoFiniteDim("join of non-cographs")
    forced = _forced_by_modules(g)
    if isinstance(forced, NoFiniteDim):
        return forced
    if any(math.isinf(g.weight(e)) for e in forced):
        return NoFiniteDim("forced edge of infinite weight")
    try:
        red = reduce(g, forced)
    except NotInducedMatching:
        return NoFiniteDim(("forced edges collide", tuple(sorted(forced))))
    rg = red.reduced_graph
    back = red.old_of
    chosen = set(forced)
    for comp in connected_components(rg):
        sub, old = rg.induced_subgraph(comp)
        res = _solve_reduced_component(sub)
        if isinstance(res, NotP7Free):
            return NotP7Free(tuple(back[old[v]] for v in res.witness))
        if isinstance(res, NoFiniteDim):
            return res
        for e in res.matching.edge_ids:
            a, b = sub.endpoints(e)
            chosen.add(g.edge_id(back[old[a]], back[old[b]]))
    ms = MatchingSet.of(g, chosen)
    if math.isinf(ms.total_weight) or not check_dim(g, ms):
        return NoFiniteDim(("final verification failed", tuple(sorted(chosen))))
    return Solved(ms)


def solve(g: Graph) -> Outcome:
    """Minimum-weight d.i.m. of ``g``, a proof of absence, or an induced P7."""
    chosen: set[int] = set()
    failure: Optional[NoFiniteDim] = None
    for comp in connected_components(g):
        if len(comp) == 1:
            continue
        sub, old = g.induced_subgraph(comp)
        out = _solve_connected(sub)
        if isinstance(out, NotP7Free):
            witness = tuple(old[v] for v in out.witness)
            assert is_induced_path(g, witness)
            return NotP7Free(witness)
        if isinstance(out, NoFiniteDim):
            failure = failure or out
            continue
        chosen.update(_lift(g, sub, old, out.matching.edge_ids))
    if failure is not None:
        return failure
    ms = MatchingSet.of(g, chosen)
    if math.isinf(ms.total_weight) or not check_dim(g, ms):
        return NoFiniteDim(("final verification failed", tuple(sorted(chosen))))
    return Solved(ms)
