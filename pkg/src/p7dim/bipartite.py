"""Weighted DIM on connected bipartite graphs.

Pipeline: BFS from a vertex (depth >= 6 gives a P7), then the level-wise
distance-hereditary test, which either certifies the graph or produces an
obstruction (hole or domino).  A C6 hands over to the C6-anchored check;
certified graphs go to a dynamic program over a pruning sequence.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    Graph,
    LevelPartition,
    bfs_levels,
    bipartition,
    is_connected,
    is_induced_cycle,
    is_induced_path,
    shortest_path,
)
from .modular import NotConnected
from .outcome import NoFiniteDim, NotP7Free, Outcome, Solved
from .verify import MatchingSet, check_dim


class NotBipartite(ValueError):
    pass


class NotDH(ValueError):
    pass


class EdgeNotOnC6(ValueError):
    pass


@dataclass(frozen=True)
class DHObstruction:
    kind: str  # "C6", "Domino", "C8", "C10" or "P7"
    vertices: tuple[int, ...]


@dataclass
class BipartiteLevels:
    N1a: list[int]
    N1b: list[int]
    M2: list[int]
    S2: list[int]
    N3: list[int]
    N4: list[int]


def _up(g: Graph, lv: LevelPartition, v: int) -> list[int]:
    k = lv.level_of[v]
    return [w for w in g.adj[v] if lv.level_of[w] == k - 1]


def _hole_obstruction(g: Graph, cycle: list[int]) -> DHObstruction:
    assert is_induced_cycle(g, cycle), cycle
    k = len(cycle)
    if k in (6, 8, 10):
        return DHObstruction(f"C{k}", tuple(cycle))
    path = tuple(cycle[:7])
    assert is_induced_path(g, path)
    return DHObstruction("P7", path)


def _domino(g: Graph, p5: tuple[int, ...], apex: int) -> DHObstruction:
    verts = tuple(p5) + (apex,)
    assert is_induced_path(g, p5)
    assert [g.has_edge(apex, x) for x in p5] == [True, False, True, False, True]
    return DHObstruction("Domino", verts)


def _star_violation(g: Graph, lv: LevelPartition, v: int, x: int, y: int) -> DHObstruction:
    """Obstruction from x, y in N(v) one level up with different neighbors two levels up."""
    k = lv.level_of[v]
    A = {w for w in _up(g, lv, x)}
    B = {w for w in _up(g, lv, y)}
    if not (A - B) or not (B - A):
        if A - B:  # make A the smaller one
            x, y, A, B = y, x, B, A
        # A strictly inside B: close a path between q in B - A and p in A around y
        q = min(B - A)
        p = min(A)
        allowed = {w for w in range(g.n) if 0 <= lv.level_of[w] <= k - 2}
        allowed -= g.nbrs[y] - {p, q}
        path = shortest_path(g, q, p, allowed)
        assert path is not None
        if len(path) == 3:
            w = path[1]
            return _domino(g, (w, q, y, v, x), p)
        return _hole_obstruction(g, [y] + path)
    p = min(A - B)
    q = min(B - A)
    allowed = {w for w in range(g.n) if 0 <= lv.level_of[w] <= k - 2}
    allowed -= (g.nbrs[x] | g.nbrs[y]) - {p, q}
    path = shortest_path(g, p, q, allowed)
    assert path is not None
    return _hole_obstruction(g, [x, v, y] + path[::-1])


def _laminar_violation(g: Graph, lv: LevelPartition, v: int, w: int) -> DHObstruction:
    Nv = set(_up(g, lv, v))
    Nw = set(_up(g, lv, w))
    c = min(Nv & Nw)
    a = min(Nv - Nw)
    b = min(Nw - Nv)
    common = set(_up(g, lv, a)) & set(_up(g, lv, b)) & set(_up(g, lv, c))
    z = min(common)
    return _domino(g, (a, v, c, w, b), z)


def _check_star(g: Graph, lv: LevelPartition, k: int) -> Optional[DHObstruction]:
    """Condition (*): the up-neighbors of each level-k vertex agree two levels up."""
    layer = lv.level(k)
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for v in layer:
        up = _up(g, lv, v)
        r = find(up[0])
        for x in up[1:]:
            s = find(x)
            if s != r:
                parent[s] = r
    ref: dict[int, frozenset[int]] = {}
    ok = True
    for x in list(parent):
        r = find(x)
        D = frozenset(_up(g, lv, x))
        if r not in ref:
            ref[r] = D
        elif ref[r] != D:
            ok = False
            break
    if ok:
        return None
    for v in layer:
        up = _up(g, lv, v)
        D0 = set(_up(g, lv, up[0]))
        for y in up[1:]:
            if set(_up(g, lv, y)) != D0:
                return _star_violation(g, lv, v, up[0], y)
    raise AssertionError("condition (*) failure not located")


def _check_laminar(g: Graph, lv: LevelPartition, k: int) -> Optional[DHObstruction]:
    """Condition (**): up-neighborhoods on level k form a laminar family."""
    ups = {v: _up(g, lv, v) for v in lv.level(k)}
    layer = sorted(ups, key=lambda v: (-len(ups[v]), v))
    owner: dict[int, int] = {}
    bad = None
    for v in layer:
        owners = {owner.get(x, -1) for x in ups[v]}
        if len(owners) > 1:
            bad = v
            break
        for x in ups[v]:
            owner[x] = v
    if bad is None:
        return None
    Nv = set(ups[bad])
    for w in sorted(ups):
        Nw = set(ups[w])
        if Nw & Nv and not Nw <= Nv and not Nv <= Nw:
            return _laminar_violation(g, lv, bad, w)
    raise AssertionError("condition (**) failure not located")


def dh_bipartite_check(g: Graph, root: int = 0) -> Optional[DHObstruction]:
    """None if ``g`` is distance-hereditary bipartite, else a verified obstruction."""
    if not is_connected(g):
        raise NotConnected("graph is disconnected")
    color, _ = bipartition(g)
    if color is None:
        raise NotBipartite("graph has an odd cycle")
    lv = bfs_levels(g, [root])
    for k in range(lv.depth, 1, -1):
        if k >= 3:
            obs = _check_star(g, lv, k)
            if obs is not None:
                return obs
        obs = _check_laminar(g, lv, k)
        if obs is not None:
            return obs
    return None


def bipartite_levels(g: Graph, a: int, b: int) -> BipartiteLevels:
    lv = bfs_levels(g, [a, b])
    N1 = lv.level(1)
    N2 = set(lv.level(2))
    M2 = sorted({g.edge_id(u, w) for u in N2 for w in g.adj[u] if w in N2})
    S2 = sorted(u for u in N2 if not any(w in N2 for w in g.adj[u]))
    return BipartiteLevels(
        [v for v in N1 if g.has_edge(v, a)],
        [v for v in N1 if g.has_edge(v, b)],
        M2,
        S2,
        lv.level(3),
        [v for d in range(4, lv.depth + 1) for v in lv.level(d)],
    )


def bipartite_check_c6_edge(g: Graph, a: int, b: int) -> Optional[MatchingSet]:
    """{ab} plus the N2 matching if the levels around ab fit a d.i.m. containing ab."""
    if not g.has_edge(a, b):
        raise ValueError(f"{a}-{b} is not an edge")
    bl = bipartite_levels(g, a, b)
    if not bl.M2:
        raise EdgeNotOnC6(f"edge {a}-{b}")
    if math.isinf(g.edge_weight(a, b)):
        return None
    N1 = set(bl.N1a) | set(bl.N1b)
    if any(w in N1 for v in N1 for w in g.adj[v]):
        return None
    N2 = {v for e in bl.M2 for v in g.endpoints(e)} | set(bl.S2)
    if any(sum(1 for w in g.adj[v] if w in N2) > 1 for v in N2):
        return None
    if bl.S2 or bl.N4:
        return None
    N3 = set(bl.N3)
    if any(w in N3 for v in N3 for w in g.adj[v]):
        return None
    if any(math.isinf(g.weight(e)) for e in bl.M2):
        return None
    if not m2_sides_share_neighborhood(g, a, b, bl):
        return None
    ms = MatchingSet.of(g, [g.edge_id(a, b)] + bl.M2)
    return ms if check_dim(g, ms) else None


def m2_sides_share_neighborhood(g: Graph, a: int, b: int, bl: Optional[BipartiteLevels] = None) -> bool:
    """Same-colour N2 matching endpoints share their N1 neighborhood."""
    if bl is None:
        bl = bipartite_levels(g, a, b)
    N1 = set(bl.N1a) | set(bl.N1b)
    color, _ = bipartition(g)
    assert color is not None
    seen: dict[int, frozenset[int]] = {}
    for e in bl.M2:
        for v in g.endpoints(e):
            nb = frozenset(g.nbrs[v] & N1)
            if seen.setdefault(color[v], nb) != nb:
                return False
    return True


# ---------------------------------------------------------------- DH solver

I_STATE, U_STATE, M_STATE = 0, 1, 2


@dataclass
class PruneStep:
    kind: str  # "pendant" or "twin"
    removed: int
    into: int


@dataclass
class _Op:
    kind: str
    v: int
    u: int
    fu: tuple[float, float, float]
    fv: tuple[float, float, float]
    w: float = 0.0


def pruning_sequence(g: Graph, root: int = 0) -> list[PruneStep]:
    """Pendant / false-twin elimination order of a DH bipartite graph down to ``root``.

    Levels are consumed deepest first; within a level, vertices go by
    increasing up-degree.  When v is reached its remaining up-neighbors are
    false twins: all but the lowest id fold into that one, then v hangs off it
    as a pendant.
    """
    lv = bfs_levels(g, [root])
    alive = [True] * g.n
    out: list[PruneStep] = []
    for k in range(lv.depth, 0, -1):
        layer = lv.level(k)
        ups = {v: _up(g, lv, v) for v in layer}
        for v in sorted(layer, key=lambda x: (len(ups[x]), x)):
            if not alive[v]:
                continue
            up = [x for x in ups[v] if alive[x]]
            keep = up[0]
            for x in up[1:]:
                out.append(PruneStep("twin", x, keep))
                alive[x] = False
            out.append(PruneStep("pendant", v, keep))
            alive[v] = False
    return out


def _dh_fast(g: Graph) -> Optional[MatchingSet]:
    inf = math.inf
    f = [(0.0, 0.0, inf) for _ in range(g.n)]
    ops: list[_Op] = []
    for step in pruning_sequence(g, 0):
        v, u = step.removed, step.into
        fu, fv = f[u], f[v]
        if step.kind == "pendant":
            w = g.edge_weight(u, v)
            new = (
                fu[I_STATE] + fv[M_STATE],
                fu[U_STATE] + fv[I_STATE],
                min(fu[M_STATE] + fv[I_STATE], fu[U_STATE] + fv[U_STATE] + w),
            )
            ops.append(_Op("pendant", v, u, fu, fv, w))
        else:
            new = (fu[I_STATE] + fv[I_STATE], inf, fu[M_STATE] + fv[M_STATE])
            ops.append(_Op("twin", v, u, fu, fv))
        f[u] = new
    root_f = f[0]
    best = min(root_f[I_STATE], root_f[M_STATE])
    if math.isinf(best):
        return None
    state = [-1] * g.n
    state[0] = I_STATE if root_f[I_STATE] <= root_f[M_STATE] else M_STATE
    chosen = []
    for op in reversed(ops):
        s = state[op.u]
        if op.kind == "twin":
            state[op.u] = state[op.v] = s
            continue
        if s == I_STATE:
            state[op.u], state[op.v] = I_STATE, M_STATE
        elif s == U_STATE:
            state[op.u], state[op.v] = U_STATE, I_STATE
        elif op.fu[M_STATE] + op.fv[I_STATE] <= op.fu[U_STATE] + op.fv[U_STATE] + op.w:
            state[op.u], state[op.v] = M_STATE, I_STATE
        else:
            state[op.u], state[op.v] = U_STATE, U_STATE
            chosen.append(g.edge_id(op.u, op.v))
    ms = MatchingSet.of(g, chosen)
    assert ms.total_weight == best, (ms.total_weight, best)
    return ms


def _dh_reference(g: Graph) -> Optional[MatchingSet]:
    from .check_xy import check_xy

    best: Optional[MatchingSet] = None
    for x, y, w in g.edges:
        if math.isinf(w):
            continue
        res = check_xy(g, x, y)
        if res is not None and (best is None or res[1] < best.total_weight):
            best = res[0]
    return best


def dh_bipartite_solve(g: Graph, method: str = "fast", certified: bool = False) -> Outcome:
    """Exact weighted DIM on a connected distance-hereditary bipartite graph.

    ``method`` is ``"fast"`` (pruning-sequence DP) or ``"reference"`` (every
    edge as a check_xy anchor).
    """
    if not certified and dh_bipartite_check(g) is not None:
        raise NotDH("graph is not distance-hereditary bipartite")
    if g.n == 1:
        return Solved(MatchingSet(frozenset(), 0.0))
    if g.n == 2:
        ms = MatchingSet.of(g, [0])
        return Solved(ms) if not math.isinf(ms.total_weight) else NoFiniteDim("infinite edge")
    if method == "fast":
        ms = _dh_fast(g)
    elif method == "reference":
        ms = _dh_reference(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    if ms is None or not check_dim(g, ms):
        return NoFiniteDim("no d.i.m. in distance-hereditary bipartite graph")
    return Solved(ms)


def deep_path(g: Graph, lv: LevelPartition, k: int = 6) -> Optional[tuple[int, ...]]:
    """Induced path of k+1 vertices down the BFS tree, if level k is reached."""
    if lv.depth < k:
        return None
    v = lv.level(k)[0]
    path = [v]
    while len(path) < k + 1:
        path.append(lv.parent[path[-1]])
    path = tuple(path[::-1])
    assert is_induced_path(g, path)
    return path


def bipartite_dim(g: Graph, method: str = "fast") -> Outcome:
    if not is_connected(g):
        raise NotConnected("graph is disconnected")
    color, _ = bipartition(g)
    if color is None:
        raise NotBipartite("graph has an odd cycle")
    if g.n == 1:
        return Solved(MatchingSet(frozenset(), 0.0))
    if g.n == 2:
        return dh_bipartite_solve(g, certified=True)
    lv = bfs_levels(g, [0])
    p7 = deep_path(g, lv)
    if p7 is not None:
        return NotP7Free(p7)
    obs = dh_bipartite_check(g, 0)
    if obs is None:
        return dh_bipartite_solve(g, method, certified=True)
    return resolve_obstruction(g, obs)


def resolve_obstruction(g: Graph, obs: DHObstruction) -> Outcome:
    if obs.kind in ("C8", "C10", "P7"):
        path = obs.vertices[:7]
        assert is_induced_path(g, path)
        return NotP7Free(tuple(path))
    if obs.kind == "Domino":
        return NoFiniteDim(obs)
    c = obs.vertices
    best: Optional[MatchingSet] = None
    for i in range(3):
        a, b = c[i], c[i + 1]
        ms = bipartite_check_c6_edge(g, a, b)
        if ms is not None and (best is None or ms.total_weight < best.total_weight):
            best = ms
    if best is None:
        return NoFiniteDim(obs)
    return Solved(best)
