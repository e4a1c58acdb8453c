"""Maximal homogeneous sets of a connected, co-connected graph.

The root of the modular decomposition of such a graph is prime, so its children
(the maximal homogeneous sets, plus singletons) partition V.  They are found in
two passes:

1. Partition refinement computes P(v), the maximal modules not containing a
   fixed vertex v.  Every split queues its smaller half, giving
   O((n + m) log n) work.
2. The parts of P(v) inside the child X(v) that contains v are exactly those
   that cannot "force" the closure of {v, part} to grow to all of V.  A
   reachability pass over the forcing digraph (with complement-BFS for the
   co-adjacency edges) separates them in linear time.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, complement_components, connected_components


class NotCoConnected(ValueError):
    pass


class NotConnected(ValueError):
    pass


@dataclass
class ModulePartition:
    modules: list[list[int]]
    outside_neighborhood: list[list[int]]
    prime_rest: list[int]


def modules_avoiding(g: Graph, v: int) -> list[list[int]]:
    """Partition of V - {v} into the maximal modules of ``g`` not containing ``v``."""
    n = g.n
    adj = g.adj
    part_of = [-1] * n
    parts: dict[int, set[int]] = {}
    events: deque[list[int]] = deque()
    counter = 0

    near = [w for w in adj[v]]
    near_set = g.nbrs[v]
    far = [w for w in range(n) if w != v and w not in near_set]
    for group in (near, far):
        if group:
            parts[counter] = set(group)
            for w in group:
                part_of[w] = counter
            counter += 1
    if not parts:
        return []

    def split(pid: int, subset: list[int]) -> None:
        nonlocal counter
        old = parts[pid]
        new = set(subset)
        old.difference_update(new)
        parts[counter] = new
        for w in subset:
            part_of[w] = counter
        counter += 1
        events.append(list(subset) if len(new) <= len(old) else list(old))

    events.append([w for w in range(n) if w != v])
    while events:
        S = events.popleft()
        for z in S:
            pz = part_of[z]
            groups: dict[int, list[int]] = {}
            for w in adj[z]:
                if w == v:
                    continue
                pw = part_of[w]
                if pw != pz:
                    groups.setdefault(pw, []).append(w)
            for pw, ws in groups.items():
                if len(ws) < len(parts[pw]):
                    split(pw, ws)
        touched: dict[int, list[int]] = {}
        for z in S:
            pz = part_of[z]
            marked = set()
            for w in adj[z]:
                if w == v:
                    continue
                pw = part_of[w]
                if pw != pz and pw not in marked:
                    marked.add(pw)
                    touched.setdefault(pw, []).append(z)
        for y_pid, zs in touched.items():
            groups = {}
            for z in zs:
                pz = part_of[z]
                if pz != y_pid:
                    groups.setdefault(pz, []).append(z)
            for pz, lst in groups.items():
                if len(lst) < len(parts[pz]):
                    split(pz, lst)
    return [sorted(p) for p in parts.values()]


def _outside_parts(g: Graph, v: int, plist: list[list[int]]) -> set[int]:
    """Indices of parts of P(v) lying outside the root child that contains v."""
    r = len(plist)
    pid = {}
    for i, p in enumerate(plist):
        for w in p:
            pid[w] = i
    rep = [p[0] for p in plist]
    near_v = g.nbrs[v]
    in_near = [rep[i] in near_v for i in range(r)]

    def adjacent_parts(i: int) -> set[int]:
        return {pid[w] for w in g.adj[rep[i]] if w != v and pid[w] != i}

    # forward pass: restricted BFS forest; the last root lies in the source SCC
    visited = [False] * r
    unvisited_near = {i for i in range(r) if in_near[i]}
    last_root = -1
    for start in range(r):
        if visited[start]:
            continue
        last_root = start
        visited[start] = True
        unvisited_near.discard(start)
        queue = [start]
        while queue:
            a = queue.pop()
            adj_a = adjacent_parts(a)
            for b in adj_a:
                if not in_near[b] and not visited[b]:
                    visited[b] = True
                    queue.append(b)
            reach = [b for b in unvisited_near if b not in adj_a and b != a]
            for b in reach:
                unvisited_near.discard(b)
                visited[b] = True
                queue.append(b)

    # reverse pass: every part that reaches the last root
    seen = {last_root}
    unseen = set(range(r)) - seen
    queue = [last_root]
    while queue:
        b = queue.pop()
        adj_b = adjacent_parts(b)
        if in_near[b]:
            reach = [a for a in unseen if a not in adj_b]
        else:
            reach = [a for a in adj_b if a in unseen]
        for a in reach:
            unseen.discard(a)
            seen.add(a)
            queue.append(a)
    return seen


def maximal_homogeneous_sets(g: Graph, allow_series: bool = False) -> ModulePartition:
    """Maximal homogeneous sets of a connected, co-connected graph.

    With ``allow_series`` a co-disconnected graph is accepted: its nontrivial
    co-components are returned, plus the clique of universal vertices when it
    is a proper subset.  Maximal homogeneous sets overlap in that case, so this
    is the coarsest disjoint family.
    """
    if g.n >= 2 and len(connected_components(g)) > 1:
        raise NotConnected("graph is disconnected")
    if g.n >= 2:
        cocomps = complement_components(g)
        if len(cocomps) > 1:
            if not allow_series:
                raise NotCoConnected("complement is disconnected")
            modules = [c for c in cocomps if len(c) >= 2]
            universal = sorted(c[0] for c in cocomps if len(c) == 1)
            rest = []
            if 2 <= len(universal) < g.n:
                modules.append(universal)
            else:
                rest = universal
            modules.sort()
            outside = [sorted(set(range(g.n)) - set(c)) for c in modules]
            return ModulePartition(modules, outside, rest)
    if g.n < 4:
        return ModulePartition([], [], list(range(g.n)))
    v = min(range(g.n), key=g.degree)
    plist = modules_avoiding(g, v)
    outside = _outside_parts(g, v, plist)
    children = [plist[i] for i in sorted(outside)]
    own = [v]
    for i, p in enumerate(plist):
        if i not in outside:
            own.extend(p)
    children.append(sorted(own))
    children.sort()
    modules = [c for c in children if len(c) >= 2]
    rest = sorted(c[0] for c in children if len(c) == 1)
    outside_nbrs = []
    for h in modules:
        hs = set(h)
        outside_nbrs.append(sorted(w for w in g.adj[h[0]] if w not in hs))
    return ModulePartition(modules, outside_nbrs, rest)


def true_twin_edges(g: Graph, part: ModulePartition) -> set[int]:
    """Edges between true twins inside modules with at least two outside neighbors."""
    out = set()
    for h, nh in zip(part.modules, part.outside_neighborhood):
        if len(nh) < 2:
            continue
        hs = set(h)
        for x in h:
            for y in g.adj[x]:
                if y > x and y in hs and g.nbrs[x] - {y} == g.nbrs[y] - {x}:
                    out.add(g.edge_id(x, y))
    return out


def is_homogeneous(g: Graph, h) -> bool:
    """Definition check, O(n * |H|)."""
    hs = set(h)
    if len(hs) < 2 or len(hs) >= g.n:
        return False
    for w in range(g.n):
        if w in hs:
            continue
        seen = sum(1 for x in hs if g.has_edge(w, x))
        if 0 < seen < len(hs):
            return False
    return True
