"""Minimum-weight d.i.m. containing a fixed edge xy that lies on a P3.

Distance levels N1..N4 around xy are forced into a rigid shape when xy is in a
d.i.m. of a P7-free graph: N1 is unmatched, the edges inside N2 and N4 are
matching edges, and every isolated N2 vertex u_i takes its mate from its
private set T_i in N3.  After the shape checks the only freedom left is the
choice of one mate per T_i, made greedily by weight within the constraints.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, bfs_levels
from .verify import MatchingSet, check_dim


class LevelCheckFailed(Exception):
    """Some necessary condition failed: no d.i.m. contains xy, or G has a P7."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotAnEdge(ValueError):
    pass


class NotOnP3(ValueError):
    pass


@dataclass
class LevelStructure:
    x: int
    y: int
    p3_witness: int
    N1: list[int]
    N2: list[int]
    N3: list[int]
    N4: list[int]
    M2: list[int]
    S2: list[int]
    M4: list[int]
    S4: list[int]
    T_two: set[int]
    S3: set[int]
    T: list[list[int]]  # T[i] belongs to S2[i]
    t_index: dict[int, int] = field(repr=False, default_factory=dict)

    def forced_edges(self, g: Graph) -> list[int]:
        return [g.edge_id(self.x, self.y)] + self.M2 + self.M4


@dataclass
class TStructure:
    pairing: list[Optional[int]]
    stars: list[Optional[list[int]]]  # Y_i: vertices of the edge-carrying component inside T_i
    cross: list[list[list[int]]]  # at the lower index of a pair: the crossing star components
    green: list[Optional[int]] = field(default_factory=list)


def _components(g: Graph, verts: set[int]) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(verts):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in verts and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _star_center(g: Graph, comp: list[int]) -> Optional[int]:
    """Center of a star component (lowest id for a single edge), or None."""
    inside = set(comp)
    k = len(comp)
    degs = {v: len(g.nbrs[v] & inside) for v in comp}
    if sum(degs.values()) != 2 * (k - 1):
        return None
    centers = [v for v in comp if degs[v] == k - 1]
    return centers[0] if centers else None


def _matching_part(g: Graph, layer: list[int], name: str) -> tuple[list[int], list[int]]:
    inside = set(layer)
    edges = set()
    lone = []
    for v in layer:
        nb = [w for w in g.adj[v] if w in inside]
        if len(nb) > 1:
            raise LevelCheckFailed(f"{name} is not a disjoint union of edges and vertices")
        if nb:
            edges.add(g.edge_id(v, nb[0]))
        else:
            lone.append(v)
    return sorted(edges), lone


def _is_bipartite(g: Graph, verts: set[int]) -> bool:
    color: dict[int, int] = {}
    for s in verts:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in verts:
                    continue
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def p3_witness(g: Graph, x: int, y: int) -> Optional[int]:
    for r in g.adj[x]:
        if r != y and r not in g.nbrs[y]:
            return r
    for r in g.adj[y]:
        if r != x and r not in g.nbrs[x]:
            return r
    return None


def build_levels(g: Graph, x: int, y: int) -> LevelStructure:
    if not g.has_edge(x, y):
        raise NotAnEdge(f"{x}-{y}")
    r = p3_witness(g, x, y)
    if r is None:
        raise NotOnP3(f"{x}-{y} is not on an induced P3")
    if math.isinf(g.edge_weight(x, y)):
        raise LevelCheckFailed("anchor edge has infinite weight")
    lv = bfs_levels(g, [x, y])
    N1, N2, N3, N4 = (lv.level(i) for i in range(1, 5))
    if lv.depth >= 5:
        raise LevelCheckFailed("N5 is not empty")
    set1 = set(N1)
    if any(w in set1 for v in N1 for w in g.adj[v]):
        raise LevelCheckFailed("N1 is not stable")
    M2, S2 = _matching_part(g, N2, "N2")
    M4, S4 = _matching_part(g, N4, "N4")
    if any(math.isinf(g.weight(e)) for e in M2 + M4):
        raise LevelCheckFailed("forced edge in N2 or N4 has infinite weight")
    set3 = set(N3)
    if not _is_bipartite(g, set3 | set(S4)):
        raise LevelCheckFailed("N3 with S4 is not bipartite")
    s2_index = {u: i for i, u in enumerate(S2)}
    matched2 = {v for e in M2 for v in g.endpoints(e)}
    matched4 = {v for e in M4 for v in g.endpoints(e)}
    T_two = set()
    S3 = set()
    T: list[list[int]] = [[] for _ in S2]
    t_index: dict[int, int] = {}
    for t in N3:
        seen = [s2_index[w] for w in g.adj[t] if w in s2_index]
        if len(seen) >= 2:
            T_two.add(t)
            S3.add(t)
        elif any(w in matched2 or w in matched4 for w in g.adj[t]):
            S3.add(t)
        elif seen:
            T[seen[0]].append(t)
            t_index[t] = seen[0]
        else:
            raise AssertionError("N3 vertex without an N2 neighbor")
    stable = S3 | set(S4)
    if any(w in stable for v in stable for w in g.adj[v]):
        raise LevelCheckFailed("S3 with S4 is not stable")
    for i, Ti in enumerate(T):
        if not Ti:
            raise LevelCheckFailed(f"T set of {S2[i]} is empty")
    return LevelStructure(x, y, r, N1, N2, N3, N4, M2, S2, M4, S4, T_two, S3, T, t_index)


def classify_T(g: Graph, ls: LevelStructure) -> TStructure:
    k = len(ls.T)
    tix = ls.t_index
    stars: list[Optional[list[int]]] = [None] * k
    for i, Ti in enumerate(ls.T):
        big = [c for c in _components(g, set(Ti)) if len(c) > 1]
        if len(big) > 1:
            raise LevelCheckFailed("T set holds two edges in different components")
        if big:
            if _star_center(g, big[0]) is None:
                raise LevelCheckFailed("component inside T set is not a star")
            stars[i] = big[0]
    sees: list[set[int]] = [set() for _ in range(k)]
    for i, Ti in enumerate(ls.T):
        for t in Ti:
            for w in g.adj[t]:
                j = tix.get(w)
                if j is not None and j != i:
                    sees[i].add(j)
    for i in range(k):
        if stars[i] is not None:
            for t in stars[i]:
                if any(tix.get(w, i) != i for w in g.adj[t]):
                    raise LevelCheckFailed("star inside a T set sees another T set")
        if len(sees[i]) > 1:
            raise LevelCheckFailed("T set sees two other T sets")
    pairing = [next(iter(s)) if s else None for s in sees]
    cross: list[list[list[int]]] = [[] for _ in range(k)]
    for i in range(k):
        j = pairing[i]
        if j is None or j < i:
            continue
        if stars[i] is not None and stars[j] is not None:
            raise LevelCheckFailed("both paired T sets contain a star")
        union = set(ls.T[i]) | set(ls.T[j])
        big = [c for c in _components(g, union) if len(c) > 1]
        if len(big) > 2:
            raise LevelCheckFailed("paired T sets span more than two edge components")
        crossing = []
        for c in big:
            if c == stars[i] or c == stars[j]:
                continue
            center = _star_center(g, c)
            if center is None:
                raise LevelCheckFailed("component across paired T sets is not a star")
            side = tix[center]
            if len(c) > 2 and any(tix[v] == side for v in c if v != center):
                raise LevelCheckFailed("star across paired T sets has leaves on both sides")
            crossing.append(c)
        centers = [tix[_star_center(g, c)] for c in crossing if len(c) > 2]
        if len(centers) != len(set(centers)):
            raise LevelCheckFailed("two crossing stars centered in the same T set")
        cross[i] = crossing
    return TStructure(pairing, stars, cross, [None] * k)


def mark_green(g: Graph, ls: LevelStructure, ts: TStructure) -> TStructure:
    k = len(ls.T)
    stable = ls.S3 | set(ls.S4)
    greens: list[set[int]] = [set() for _ in range(k)]
    for i, Ti in enumerate(ls.T):
        for t in Ti:
            if any(w in stable for w in g.adj[t]):
                greens[i].add(t)
        Y = ts.stars[i]
        if Y is not None and len(Y) > 2:
            greens[i].add(_star_center(g, Y))
    for i in range(k):
        for comp in ts.cross[i]:
            if len(comp) > 2:
                c = _star_center(g, comp)
                greens[ls.t_index[c]].add(c)
    green: list[Optional[int]] = [None] * k
    for i in range(k):
        if len(greens[i]) > 1:
            raise LevelCheckFailed("T set has two green vertices")
        if greens[i]:
            t = next(iter(greens[i]))
            green[i] = t
            rest = set(ls.T[i]) - g.nbrs[t]
            if any(w in rest for v in rest for w in g.adj[v]):
                raise LevelCheckFailed("T set minus the green neighborhood has an edge")
    all_green = {t for t in green if t is not None}
    if any(w in all_green for t in all_green for w in g.adj[t]):
        raise LevelCheckFailed("adjacent green vertices")
    ts.green = green
    return ts


def _best(g: Graph, u: int, cands) -> Optional[int]:
    best = None
    for t in sorted(cands):
        if best is None or g.edge_weight(u, t) < g.edge_weight(u, best):
            best = t
    return best


def _has_edge_within(g: Graph, verts: set[int]) -> bool:
    return any(w in verts for v in verts for w in g.adj[v])


def _choose_mates(g: Graph, ls: LevelStructure, ts: TStructure, difference_filter: bool) -> dict[int, int]:
    """Mate t in T_i for every u_i, following the isolated and paired rules."""
    S2, T = ls.S2, ls.T
    mate: dict[int, int] = {}
    for i, Ti in enumerate(T):
        if ts.pairing[i] is not None:
            continue
        u = S2[i]
        if ts.green[i] is not None:
            mate[i] = ts.green[i]
        elif ts.stars[i] is not None:
            mate[i] = _best(g, u, ts.stars[i])
        else:
            mate[i] = _best(g, u, Ti)
    for i in range(len(T)):
        j = ts.pairing[i]
        if j is None or j < i:
            continue
        gi, gj = ts.green[i], ts.green[j]
        if gi is not None and gj is not None:
            if g.has_edge(gi, gj):
                raise LevelCheckFailed("paired green vertices are adjacent")
            if difference_filter:
                drop = g.nbrs[gi] - g.nbrs[gj]
            else:
                drop = g.nbrs[gi] | g.nbrs[gj]
            if _has_edge_within(g, (set(T[i]) | set(T[j])) - drop):
                raise LevelCheckFailed("edge left uncovered by paired green vertices")
            mate[i], mate[j] = gi, gj
        elif gi is not None or gj is not None:
            a, b = (i, j) if gi is not None else (j, i)
            ga = ts.green[a]
            rest = (set(T[a]) | set(T[b])) - g.nbrs[ga]
            big = [c for c in _components(g, rest) if len(c) > 1]
            if not rest or len(big) > 1:
                raise LevelCheckFailed("paired T sets leave more than one edge component")
            allowed = set(T[b]) - g.nbrs[ga]
            pick = None
            if big:
                comp = big[0]
                side_b = [v for v in comp if v in allowed]
                if all(v in allowed for v in comp):
                    pick = _best(g, S2[b], comp)  # the edge Y_b
                else:
                    covers = [v for v in side_b if all(w in g.nbrs[v] for w in comp if w != v)]
                    pick = covers[0] if covers else None
            else:
                pick = _best(g, S2[b], allowed)
            if pick is None:
                raise LevelCheckFailed("no admissible mate in the green-free T set")
            mate[a], mate[b] = ga, pick
        else:
            mate.update(_no_green_pair(g, ls, i, j))
    return mate


def _no_green_pair(g: Graph, ls: LevelStructure, i: int, j: int) -> dict[int, int]:
    S2, T = ls.S2, ls.T
    Ti, Tj = set(T[i]), set(T[j])
    comps = [c for c in _components(g, Ti | Tj) if len(c) > 1]
    if any(len(c) > 2 for c in comps):
        raise LevelCheckFailed("star with P3 but no green vertex")
    crossing = [c for c in comps if (c[0] in Ti) != (c[1] in Ti)]
    if not crossing:
        raise LevelCheckFailed("paired T sets without a crossing edge")
    a, b = crossing[0]
    ti, tj = (a, b) if a in Ti else (b, a)
    others = [c for c in comps if c is not crossing[0]]
    wi = lambda t: g.edge_weight(S2[i], t)  # noqa: E731
    wj = lambda t: g.edge_weight(S2[j], t)  # noqa: E731
    if others:
        p, q = others[0]
        if p in Ti and q in Ti:
            return {i: _best(g, S2[i], [p, q]), j: tj}
        if p in Tj and q in Tj:
            return {i: ti, j: _best(g, S2[j], [p, q])}
        p, q = (p, q) if p in Ti else (q, p)
        if wi(p) + wj(tj) <= wi(ti) + wj(q):
            return {i: p, j: tj}
        return {i: ti, j: q}
    rest_i = Ti - {ti}
    rest_j = Tj - {tj}
    if not rest_i and not rest_j:
        raise LevelCheckFailed("single crossing edge cannot be matched")
    if rest_i and not rest_j:
        return {i: _best(g, S2[i], rest_i), j: tj}
    if rest_j and not rest_i:
        return {i: ti, j: _best(g, S2[j], rest_j)}
    zi = _best(g, S2[i], rest_i)
    zj = _best(g, S2[j], rest_j)
    if wi(zi) + wj(tj) <= wi(ti) + wj(zj):
        return {i: zi, j: tj}
    return {i: ti, j: zj}


def check_xy(g: Graph, x: int, y: int, difference_filter: bool = False) -> Optional[tuple[MatchingSet, float]]:
    """Minimum-weight d.i.m. containing xy, or None.

    None means no d.i.m. contains xy, or the graph is not P7-free.  Any returned
    set has passed check_dim.
    """
    try:
        ls = build_levels(g, x, y)
        ids = ls.forced_edges(g)
        if ls.S2:
            ts = mark_green(g, ls, classify_T(g, ls))
            mate = _choose_mates(g, ls, ts, difference_filter)
            ids += [g.edge_id(ls.S2[i], t) for i, t in sorted(mate.items())]
    except LevelCheckFailed:
        return None
    ms = MatchingSet.of(g, ids)
    if math.isinf(ms.total_weight) or not check_dim(g, ms):
        return None
    return ms, ms.total_weight


def explain_check_xy(g: Graph, x: int, y: int) -> Optional[str]:
    """Reason check_xy rejects xy, or None when it succeeds."""
    try:
        ls = build_levels(g, x, y)
        if ls.S2:
            ts = mark_green(g, ls, classify_T(g, ls))
            _choose_mates(g, ls, ts, False)
    except LevelCheckFailed as exc:
        return exc.reason
    return None if check_xy(g, x, y) is not None else "final verification"
