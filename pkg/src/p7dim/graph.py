"""Weighted simple graphs and the traversal primitives shared by every solver stage.

Vertices are dense integers ``0..n-1``.  Edges carry a stable integer id (their
position in :attr:`Graph.edges`) and a nonnegative weight that may be
``math.inf``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

INF = math.inf


class GraphError(ValueError):
    """Malformed graph input."""


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NegativeWeight(GraphError):
    pass


class Graph:
    """Immutable weighted simple graph.

    ``edges[i] == (u, v, w)`` with ``u < v``; ``adj[v]`` is the sorted neighbor
    list of ``v`` and ``nbrs[v]`` the same as a frozenset.
    """

    __slots__ = ("n", "edges", "adj", "nbrs", "_eid")

    def __init__(self, n: int, edges: Sequence[tuple[int, int, float]]):
        self.n = n
        self.edges: tuple[tuple[int, int, float], ...] = tuple(edges)
        self._eid: dict[tuple[int, int], int] = {}
        lists: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v, _) in enumerate(self.edges):
            self._eid[(u, v)] = i
            lists[u].append(v)
            lists[v].append(u)
        for lst in lists:
            lst.sort()
        self.adj: tuple[list[int], ...] = tuple(lists)
        self.nbrs: tuple[frozenset[int], ...] = tuple(frozenset(lst) for lst in lists)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.edges))))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbrs[u]

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._eid[(u, v)]

    def find_edge(self, u: int, v: int) -> Optional[int]:
        if u > v:
            u, v = v, u
        return self._eid.get((u, v))

    def weight(self, eid: int) -> float:
        return self.edges[eid][2]

    def edge_weight(self, u: int, v: int) -> float:
        return self.edges[self.edge_id(u, v)][2]

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid]
        return u, v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(sub, old)`` where ``old[i]`` is the host vertex of sub-vertex ``i``.

        Vertex order is ascending host id, so relabelling is monotone.
        """
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        sub_edges = []
        for i, v in enumerate(old):
            for w in self.adj[v]:
                j = new.get(w)
                if j is not None and i < j:
                    sub_edges.append((i, j, self.edge_weight(v, w)))
        return Graph(len(old), sub_edges), old

    def with_weights(self, weights: dict[int, float]) -> "Graph":
        """Copy with some edge weights replaced (keyed by edge id)."""
        edges = [(u, v, weights.get(i, w)) for i, (u, v, w) in enumerate(self.edges)]
        return Graph(self.n, edges)


def build_graph(n: int, weighted_edges: Iterable[Sequence]) -> Graph:
    """Validate and canonicalise an edge list.

    Items are ``(u, v)`` or ``(u, v, w)``; a missing weight defaults to 1.0.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    seen: set[tuple[int, int]] = set()
    edges = []
    for item in weighted_edges:
        if len(item) == 2:
            u, v = item
            w = 1.0
        else:
            u, v, w = item
        u, v = int(u), int(v)
        w = float(w)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if math.isnan(w) or w < 0:
            raise NegativeWeight(f"edge ({u}, {v}) has weight {w}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        seen.add((u, v))
        edges.append((u, v, w))
    return Graph(n, edges)


@dataclass
class LevelPartition:
    """BFS distance levels from a seed set; ``level_of[v] == -1`` if unreached."""

    levels: list[list[int]]
    level_of: list[int]
    parent: list[int] = field(repr=False, default_factory=list)

    def level(self, i: int) -> list[int]:
        return self.levels[i] if 0 <= i < len(self.levels) else []

    @property
    def depth(self) -> int:
        return len(self.levels) - 1


def bfs_levels(g: Graph, seed: Iterable[int]) -> LevelPartition:
    seed = list(dict.fromkeys(seed))
    if not seed:
        raise ValueError("seed set must be nonempty")
    level_of = [-1] * g.n
    parent = [-1] * g.n
    for s in seed:
        if not 0 <= s < g.n:
            raise VertexOutOfRange(f"seed vertex {s}")
        level_of[s] = 0
    levels = [sorted(seed)]
    frontier = levels[0]
    adj = g.adj
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if level_of[w] < 0:
                    level_of[w] = d
                    parent[w] = u
                    nxt.append(w)
        if nxt:
            nxt.sort()
            levels.append(nxt)
        frontier = nxt
    return LevelPartition(levels, level_of, parent)


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    adj = g.adj
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        cid = len(out)
        comp[s] = cid
        members = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if comp[w] < 0:
                    comp[w] = cid
                    members.append(w)
                    stack.append(w)
        members.sort()
        out.append(members)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or min(bfs_levels(g, [0]).level_of) >= 0


def complement_components(g: Graph, vertices: Optional[Sequence[int]] = None) -> list[list[int]]:
    """Connected components of the complement of ``g[vertices]`` in O(n + m).

    Standard trick: keep the unvisited set and, for each popped vertex, split it
    into graph-neighbors (kept) and non-neighbors (visited now).
    """
    verts = list(range(g.n)) if vertices is None else list(vertices)
    unvisited = set(verts)
    out = []
    nbrs = g.nbrs
    for s in verts:
        if s not in unvisited:
            continue
        unvisited.discard(s)
        members = [s]
        queue = [s]
        while queue:
            u = queue.pop()
            nu = nbrs[u]
            if len(unvisited) <= len(nu):
                reach = [w for w in unvisited if w not in nu]
            else:
                keep = unvisited & nu
                reach = list(unvisited - keep)
            if reach:
                unvisited.difference_update(reach)
                if len(reach) > len(unvisited):
                    # CPython sets never shrink; a sparse table makes iteration slow
                    unvisited = set(unvisited)
                members.extend(reach)
                queue.extend(reach)
        members.sort()
        out.append(members)
    return out


@dataclass
class BlockTree:
    blocks: list[list[int]]
    cut_vertices: set[int]
    leaf_blocks: list[int]  # indices into ``blocks``
    block_edges: list[list[int]] = field(repr=False, default_factory=list)


def blocks(g: Graph) -> BlockTree:
    """Biconnected components via iterative Hopcroft-Tarjan.

    Isolated vertices form single-vertex blocks so that every vertex is covered.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    adj = g.adj
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    out_blocks: list[list[int]] = []
    out_edges: list[list[int]] = []
    cut: set[int] = set()

    def pop_block(u: int, v: int) -> None:
        verts: set[int] = set()
        eids = []
        while True:
            a, b = edge_stack.pop()
            verts.add(a)
            verts.add(b)
            eids.append(g.edge_id(a, b))
            if (a, b) == (u, v):
                break
        out_blocks.append(sorted(verts))
        out_edges.append(sorted(eids))

    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        if not adj[root]:
            out_blocks.append([root])
            out_edges.append([])
            continue
        root_children = 0
        # frames: (vertex, parent, next neighbor index)
        stack = [(root, -1, 0)]
        while stack:
            u, p, i = stack[-1]
            if i < len(adj[u]):
                stack[-1] = (u, p, i + 1)
                w = adj[u][i]
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((u, w))
                    stack.append((w, u, 0))
                    if u == root:
                        root_children += 1
                elif w != p and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                stack.pop()
                if p >= 0:
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        if p != root:
                            cut.add(p)
                        pop_block(p, u)
        if root_children > 1:
            cut.add(root)

    leaf = [i for i, b in enumerate(out_blocks) if sum(1 for v in b if v in cut) <= 1]
    return BlockTree(out_blocks, cut, leaf, out_edges)


def bipartition(g: Graph) -> tuple[Optional[list[int]], Optional[list[int]]]:
    """Two-colour every component, or return ``(None, odd_closed_walk)``.

    The odd walk is the BFS-tree cycle through the first monochromatic edge,
    listed as a vertex sequence whose consecutive pairs (cyclically) are edges.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    adj = g.adj
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return None, _tree_cycle(parent, u, w)
    return color, None


def _tree_cycle(parent: list[int], u: int, w: int) -> list[int]:
    path_u = [u]
    while parent[path_u[-1]] >= 0:
        path_u.append(parent[path_u[-1]])
    pos = {v: i for i, v in enumerate(path_u)}
    path_w = [w]
    while path_w[-1] not in pos:
        path_w.append(parent[path_w[-1]])
    lca = path_w[-1]
    return path_u[: pos[lca] + 1] + path_w[-2::-1]


def shortest_path(g: Graph, source: int, target: int, allowed: Optional[set[int]] = None) -> Optional[list[int]]:
    """BFS path from ``source`` to ``target`` inside ``allowed`` (all vertices if None)."""
    if source == target:
        return [source]
    parent = {source: -1}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in parent or (allowed is not None and w not in allowed):
                continue
            parent[w] = u
            if w == target:
                path = [w]
                while parent[path[-1]] >= 0:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            if g.has_edge(path[i], path[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True
