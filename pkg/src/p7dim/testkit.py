"""Ground-truth oracles, instance generators and invariant checks for tests."""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, connected_components, is_induced_path
from .outcome import NoFiniteDim, NotP7Free, Outcome, Solved
from .verify import MatchingSet, check_dim


class TooLarge(ValueError):
    pass


DEFAULT_GUARD = 16


# ---------------------------------------------------------------- oracle


def _has_k4(g: Graph) -> bool:
    for u, v, _ in g.edges:
        common = sorted(g.nbrs[u] & g.nbrs[v])
        for i, a in enumerate(common):
            for b in common[i + 1:]:
                if g.has_edge(a, b):
                    return True
    return False


def _neighborhood_has(g: Graph, c: int, closed_cycle: bool) -> bool:
    """Induced C4 (closed_cycle) or induced P4 inside N(c)."""
    nb = g.adj[c]
    for quad in itertools.combinations(nb, 4):
        for perm in itertools.permutations(quad):
            if perm[0] > perm[-1] and not closed_cycle:
                continue
            if closed_cycle:
                a, b, cc, d = perm
                if (
                    g.has_edge(a, b) and g.has_edge(b, cc) and g.has_edge(cc, d) and g.has_edge(d, a)
                    and not g.has_edge(a, cc) and not g.has_edge(b, d)
                ):
                    return True
            elif is_induced_path(g, perm):
                return True
    return False


def forbidden_subgraph(g: Graph) -> Optional[str]:
    """Name of a K4, W4 or gem inside ``g``, if any (none can occur with a d.i.m.)."""
    if _has_k4(g):
        return "K4"
    for c in range(g.n):
        if g.degree(c) >= 4:
            if _neighborhood_has(g, c, True):
                return "W4"
            if _neighborhood_has(g, c, False):
                return "gem"
    return None


def oracle_dim(g: Graph, guard_n: int = DEFAULT_GUARD, prefilter: bool = False) -> Outcome:
    """Exact minimum-weight d.i.m. by exhaustive search.

    Every vertex is labelled matched or unmatched; unmatched vertices must be
    pairwise nonadjacent and each matched vertex needs exactly one matched
    neighbor.  The matched-matched edges then form the d.i.m.  The search is a
    plain backtracking with a weight bound.
    """
    n = g.n
    if n > guard_n:
        raise TooLarge(f"n={n} exceeds oracle guard {guard_n}")
    if prefilter and forbidden_subgraph(g) is not None:
        return NoFiniteDim("forbidden subgraph")
    if n == 0:
        return Solved(MatchingSet(frozenset(), 0.0))

    # visit vertices so that each one has an earlier neighbor where possible
    order: list[int] = []
    placed = [False] * n
    for s in sorted(range(n), key=lambda v: -g.degree(v)):
        if placed[s]:
            continue
        placed[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in g.adj[u]:
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    last_nbr_pos = [max([pos[w] for w in g.adj[v]] + [pos[v]]) for v in range(n)]

    UNSET, FREE, MATCHED = 0, 1, 2
    state = [UNSET] * n
    mates = [0] * n  # matched neighbors so far
    best_w = math.inf
    best_set: Optional[list[int]] = None
    chosen: list[int] = []

    def closed_ok(v: int, upto: int) -> bool:
        # a matched vertex whose neighbors are all decided needs exactly one mate
        return not (state[v] == MATCHED and last_nbr_pos[v] <= upto and mates[v] != 1)

    def rec(i: int, cur: float) -> None:
        nonlocal best_w, best_set
        if cur >= best_w:
            return
        if i == n:
            best_w = cur
            best_set = list(chosen)
            return
        v = order[i]
        nb = g.adj[v]
        # option: unmatched
        if all(state[w] != FREE for w in nb):
            state[v] = FREE
            if all(closed_ok(w, i) for w in nb if state[w] == MATCHED) and closed_ok(v, i):
                rec(i + 1, cur)
            state[v] = UNSET
        # option: matched
        matched_nb = [w for w in nb if state[w] == MATCHED]
        if len(matched_nb) <= 1 and all(mates[w] == 0 for w in matched_nb):
            add = 0.0
            if matched_nb:
                add = g.edge_weight(v, matched_nb[0])
            if not math.isinf(add):
                state[v] = MATCHED
                for w in matched_nb:
                    mates[w] += 1
                    chosen.append(g.edge_id(v, w))
                mates[v] = len(matched_nb)
                if all(closed_ok(w, i) for w in nb if state[w] == MATCHED) and closed_ok(v, i):
                    rec(i + 1, cur + add)
                for w in matched_nb:
                    mates[w] -= 1
                    chosen.pop()
                mates[v] = 0
                state[v] = UNSET

    rec(0, 0.0)
    if best_set is None:
        return NoFiniteDim("exhaustive search")
    ms = MatchingSet.of(g, best_set)
    assert naive_check_dim(g, ms.edge_ids)
    return Solved(ms)


def naive_check_dim(g: Graph, ids) -> bool:
    """Definition check: pairwise edge distance >= 2 and every edge touched."""
    chosen = [g.endpoints(e) for e in ids]
    for i in range(len(chosen)):
        a, b = chosen[i]
        for j in range(i + 1, len(chosen)):
            c, d = chosen[j]
            if {a, b} & {c, d}:
                return False
            if any(g.has_edge(p, q) for p in (a, b) for q in (c, d)):
                return False
    for u, v, _ in g.edges:
        if not any(u in e or v in e for e in chosen):
            return False
    return True


# ---------------------------------------------------------------- P7 search


def _induced_paths(g: Graph, length: int) -> Iterator[list[int]]:
    """Induced paths on ``length`` vertices, each listed once (first < last)."""
    n = g.n
    path: list[int] = []
    blocked = [0] * n  # number of path vertices adjacent to / equal to v

    def push(v: int) -> None:
        path.append(v)
        blocked[v] += 1
        for w in g.adj[v]:
            blocked[w] += 1

    def pop() -> None:
        v = path.pop()
        blocked[v] -= 1
        for w in g.adj[v]:
            blocked[w] -= 1

    def rec() -> Iterator[list[int]]:
        if len(path) == length:
            if path[0] < path[-1]:
                yield list(path)
            return
        last = path[-1]
        for w in g.adj[last]:
            # w may only touch the current last vertex
            if blocked[w] == 1:
                push(w)
                yield from rec()
                pop()

    for s in range(n):
        push(s)
        if length == 1:
            yield [s]
        else:
            yield from rec()
        pop()


def find_induced_p7(g: Graph) -> Optional[tuple[int, ...]]:
    for p in _induced_paths(g, 7):
        return tuple(p)
    return None


def induced_cycles(g: Graph, max_len: int) -> Iterator[list[int]]:
    """Chordless cycles of length 3..max_len, each once (smallest vertex first)."""
    for k in range(2, max_len):
        for p in _induced_paths(g, k):
            s = p[0]
            if any(v < s for v in p):
                continue
            # close through one extra vertex c adjacent to exactly both ends
            for c in g.adj[p[-1]]:
                if c <= s or c in p:
                    continue
                if not g.has_edge(c, s):
                    continue
                if any(g.has_edge(c, v) for v in p[1:-1]):
                    continue
                if k == 2 and c < p[1]:
                    continue
                cyc = p + [c]
                # each cycle appears with both orientations; keep one
                if cyc[1] < cyc[-1]:
                    yield cyc


# ---------------------------------------------------------------- reference solver


def edge_anchored_solve(g: Graph, _depth: int = 0) -> Outcome:
    """Minimum over check_xy anchored at every edge lying on a P3.

    Edges not on any P3 (their endpoints are true twins) cannot serve as an
    anchor; such an edge is tried by forcing it, reducing, and solving the
    remaining components recursively.
    """
    from .check_xy import check_xy
    from .verify import NotInducedMatching, reduce

    comps = connected_components(g)
    if len(comps) > 1:
        total: set[int] = set()
        for comp in comps:
            sub, old = g.induced_subgraph(comp)
            out = edge_anchored_solve(sub, _depth)
            if not isinstance(out, Solved):
                return out
            for e in out.matching.edge_ids:
                total.add(g.edge_id(*[old[x] for x in sub.endpoints(e)]))
        return Solved(MatchingSet.of(g, total))
    if g.n == 1:
        return Solved(MatchingSet(frozenset(), 0.0))
    best: Optional[MatchingSet] = None

    def offer(ids) -> None:
        nonlocal best
        ms = MatchingSet.of(g, ids)
        if math.isinf(ms.total_weight) or not check_dim(g, ms):
            return
        if best is None or ms.total_weight < best.total_weight:
            best = ms

    for e, (x, y, w) in enumerate(g.edges):
        if math.isinf(w):
            continue
        if g.nbrs[x] - {y} != g.nbrs[y] - {x}:
            res = check_xy(g, x, y)
            if res is not None:
                offer(res[0].edge_ids)
            continue
        try:
            red = reduce(g, [e])
        except NotInducedMatching:
            continue
        sub = red.reduced_graph
        old = red.old_of
        if any(
            sub.endpoints(f)[0] in red.red_vertices and sub.endpoints(f)[1] in red.red_vertices
            for f in range(sub.m)
        ):
            continue
        if sub.n == 0:
            offer([e])
            continue
        out = edge_anchored_solve(sub, _depth + 1)
        if isinstance(out, Solved):
            ids = [e] + [g.edge_id(old[a], old[b]) for a, b in (sub.endpoints(f) for f in out.matching.edge_ids)]
            offer(ids)
    if best is None:
        return NoFiniteDim("no anchored solution")
    return Solved(best)


# ---------------------------------------------------------------- generators


@dataclass
class PlantedInstance:
    graph: Graph
    planted: MatchingSet
    seed: int


def gen_planted(n: int, avg_degree: float, seed: int, max_weight: int = 100) -> PlantedInstance:
    """Random graph built around a planted d.i.m.

    About n/3 disjoint edges form M; the rest is a stable set I.  Extra edges
    only join I to V(M), so M stays a d.i.m.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    k = max(1, n // 3)
    pairs = [(perm[2 * i], perm[2 * i + 1]) for i in range(k)]
    matched = perm[: 2 * k]
    free = perm[2 * k:]
    edges: set[tuple[int, int]] = set()
    for a, b in pairs:
        edges.add((min(a, b), max(a, b)))
    if free:
        for v in free:
            u = matched[rng.randrange(len(matched))]
            edges.add((min(u, v), max(u, v)))
        target = int(n * avg_degree / 2)
        cap = len(free) * len(matched) + k
        target = min(target, cap)
        while len(edges) < target:
            v = free[rng.randrange(len(free))]
            u = matched[rng.randrange(len(matched))]
            edges.add((min(u, v), max(u, v)))
    items = sorted(edges)
    weighted = [(u, v, float(rng.randint(1, max_weight))) for u, v in items]
    g = Graph(n, weighted)
    planted = MatchingSet.of(g, [g.edge_id(a, b) for a, b in pairs])
    return PlantedInstance(g, planted, seed)


def gen_random(n: int, p: float, seed: int, max_weight: int = 100, connected: bool = True) -> Graph:
    """Erdos-Renyi graph with integer weights; optionally patched to be connected."""
    rng = random.Random(seed)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    if connected:
        order = list(range(n))
        rng.shuffle(order)
        for i in range(1, n):
            v = order[i]
            if not any((min(v, u), max(v, u)) in edges for u in order[:i]):
                u = order[rng.randrange(i)]
                edges.add((min(u, v), max(u, v)))
    return Graph(n, [(u, v, float(rng.randint(1, max_weight))) for u, v in sorted(edges)])


def gen_cograph(n: int, seed: int, max_weight: int = 100, connected: bool = True) -> Graph:
    """Random cograph from a random cotree; the root is a join when ``connected``."""
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()

    def build(verts: list[int], join: bool) -> None:
        if len(verts) == 1:
            return
        k = rng.randint(2, min(len(verts), 3))
        rng.shuffle(verts)
        cuts = sorted(rng.sample(range(1, len(verts)), k - 1))
        groups = [verts[a:b] for a, b in zip([0] + cuts, cuts + [len(verts)])]
        if join:
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    for a in groups[i]:
                        for b in groups[j]:
                            edges.add((min(a, b), max(a, b)))
        for grp in groups:
            build(grp, not join)

    root_join = True if connected else rng.random() < 0.5
    build(list(range(n)), root_join)
    return Graph(n, [(u, v, float(rng.randint(1, max_weight))) for u, v in sorted(edges)])


def gen_dh_bipartite(n: int, seed: int, max_weight: int = 100, max_depth: Optional[int] = None) -> Graph:
    """Random connected distance-hereditary bipartite graph.

    Grown from one vertex by pendant additions and false twins.  With
    ``max_depth`` every vertex stays within that distance of vertex 0.
    """
    rng = random.Random(seed)
    nbrs: list[set[int]] = [set()]
    depth = [0]
    for v in range(1, n):
        if v == 1 or rng.random() < 0.5:
            options = [u for u in range(v) if max_depth is None or depth[u] < max_depth]
            u = options[rng.randrange(len(options))]
            nbrs.append({u})
            nbrs[u].add(v)
            depth.append(depth[u] + 1)
        else:
            u = rng.randrange(1, v) if v > 1 else 0
            nbrs.append(set(nbrs[u]))
            for w in nbrs[u]:
                nbrs[w].add(v)
            depth.append(depth[u])
    edges = sorted((u, v) for u in range(n) for v in nbrs[u] if u < v)
    return Graph(n, [(u, v, float(rng.randint(1, max_weight))) for u, v in edges])


# ---------------------------------------------------------------- invariants


def structural_violations(g: Graph, ms: MatchingSet, cycle_limit: int = 14) -> list[str]:
    """Necessary properties of any d.i.m.: odd short holes carry exactly one
    matching edge, C4s carry none, C6s carry zero or two, and no K4, W4 or gem
    occurs.  Cycle enumeration is skipped above ``cycle_limit`` vertices.
    """
    out = []
    chosen = set(ms.edge_ids)
    if g.n <= cycle_limit:
        for cyc in induced_cycles(g, 7):
            k = len(cyc)
            on = sum(1 for i in range(k) if g.edge_id(cyc[i], cyc[(i + 1) % k]) in chosen)
            if k in (3, 5, 7) and on != 1:
                out.append(f"C{k} {cyc} has {on} matching edges")
            elif k == 4 and on != 0:
                out.append(f"C4 {cyc} has {on} matching edges")
            elif k == 6 and on not in (0, 2):
                out.append(f"C6 {cyc} has {on} matching edges")
        bad = forbidden_subgraph(g)
        if bad is not None:
            out.append(f"contains {bad}")
    elif _has_k4(g):
        out.append("contains K4")
    return out
