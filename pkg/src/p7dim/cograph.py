"""Cograph recognition and weighted DIM on connected cographs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, complement_components, is_connected, is_induced_path
from .modular import NotConnected
from .outcome import NoFiniteDim, Outcome, Solved
from .verify import MatchingSet, check_dim


class NotCograph(ValueError):
    pass


@dataclass
class SuperStarShape:
    universal_vertex: int
    star_component: Optional[tuple[int, list[int]]]  # (center, leaves)
    stable_rest: list[int]


def _components_within(g: Graph, verts: Sequence[int]) -> list[list[int]]:
    inside = set(verts)
    seen: set[int] = set()
    out = []
    for s in verts:
        if s in seen:
            continue
        seen.add(s)
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in inside and w not in seen:
                    seen.add(w)
                    members.append(w)
                    stack.append(w)
        out.append(sorted(members))
    return out


def find_p4(g: Graph, verts: Optional[Sequence[int]] = None) -> Optional[tuple[int, int, int, int]]:
    """An induced P4 inside ``g[verts]``, or None.

    Looks at every edge bc for a in N(b) - N[c] and d in N(c) - N[b] with a, d
    nonadjacent.
    """
    inside = set(range(g.n)) if verts is None else set(verts)
    nbrs = g.nbrs
    for b in sorted(inside):
        nb = nbrs[b] & inside
        for c in sorted(nb):
            nc = nbrs[c] & inside
            side_a = [a for a in nb if a != c and a not in nc]
            if not side_a:
                continue
            side_d = [d for d in nc if d != b and d not in nb]
            if not side_d:
                continue
            for a in sorted(side_a):
                na = nbrs[a]
                for d in sorted(side_d):
                    if d not in na:
                        return (a, b, c, d)
    return None


def is_cograph(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """P4-freeness by recursive component / co-component splitting.

    A vertex set of size >= 2 that is both connected and co-connected holds a
    P4, which is then located and returned.
    """
    stack = [list(range(g.n))]
    while stack:
        verts = stack.pop()
        if len(verts) < 2:
            continue
        comps = _components_within(g, verts)
        if len(comps) > 1:
            stack.extend(comps)
            continue
        cocomps = complement_components(g, verts)
        if len(cocomps) > 1:
            stack.extend(cocomps)
            continue
        p4 = find_p4(g, verts)
        assert p4 is not None and is_induced_path(g, p4)
        return False, p4
    return True, None


def _shape_at(g: Graph, u: int) -> Optional[SuperStarShape]:
    rest = [v for v in range(g.n) if v != u]
    comps = _components_within(g, rest)
    big = [c for c in comps if len(c) > 1]
    stable = sorted(c[0] for c in comps if len(c) == 1)
    if not big:
        return SuperStarShape(u, None, stable)
    if len(big) > 1:
        return None
    comp = big[0]
    k = len(comp)
    inside = set(comp)
    degs = {v: len(g.nbrs[v] & inside) for v in comp}
    centers = [v for v in comp if degs[v] == k - 1]
    if not centers or any(degs[v] != 1 for v in comp if v != centers[0]):
        return None
    c = centers[0]
    return SuperStarShape(u, (c, [v for v in comp if v != c]), stable)


def superstar_shape(g: Graph) -> Optional[SuperStarShape]:
    for u in range(g.n):
        if g.degree(u) == g.n - 1:
            shape = _shape_at(g, u)
            if shape is not None:
                return shape
    return None


def _candidates(g: Graph) -> list[list[int]]:
    out: list[list[int]] = []
    for u in range(g.n):
        if g.degree(u) != g.n - 1:
            continue
        shape = _shape_at(g, u)
        if shape is None:
            continue
        if shape.star_component is None:
            out.extend([g.edge_id(u, v)] for v in g.adj[u])
        else:
            c, leaves = shape.star_component
            if len(leaves) == 1:
                out.append([g.edge_id(u, c)])
                out.append([g.edge_id(u, leaves[0])])
            else:
                out.append([g.edge_id(u, c)])
    # join of a disjoint union of edges with a stable set
    cocomps = complement_components(g)
    if len(cocomps) == 2:
        for first, second in (cocomps, cocomps[::-1]):
            inside = set(first)
            if all(len(g.nbrs[v] & inside) == 1 for v in first):
                other = set(second)
                if all(not (g.nbrs[v] & other) for v in second):
                    out.append(sorted({g.edge_id(v, next(iter(g.nbrs[v] & inside))) for v in first}))
    return out


def cograph_dim(g: Graph, check: bool = True) -> Outcome:
    """Minimum-weight d.i.m. of a connected cograph, over all admissible shapes."""
    if check:
        if not is_connected(g):
            raise NotConnected("graph is disconnected")
        ok, _ = is_cograph(g)
        if not ok:
            raise NotCograph("graph contains an induced P4")
    if g.n == 1:
        return Solved(MatchingSet(frozenset(), 0.0))
    best: Optional[MatchingSet] = None
    for ids in _candidates(g):
        ms = MatchingSet.of(g, ids)
        if math.isinf(ms.total_weight) or not check_dim(g, ms):
            continue
        if best is None or (ms.total_weight, sorted(ms.edge_ids)) < (best.total_weight, sorted(best.edge_ids)):
            best = ms
    if best is None:
        return NoFiniteDim("no admissible super-star or join shape")
    return Solved(best)
