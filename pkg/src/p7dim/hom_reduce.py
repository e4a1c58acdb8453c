"""Forced edges from single-neighbor homogeneous sets and triangle leaf blocks."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph, blocks


class NotHomogeneousSingleNeighbor(ValueError):
    pass


class Hom1Status(enum.Enum):
    CONTINUE = "continue"
    NO_DIM = "no_dim"
    POSTPONED_TRIANGLE_LEAF = "postponed_triangle_leaf"
    POSTPONED_STABLE_FRINGE = "postponed_stable_fringe"


@dataclass
class Hom1Verdict:
    status: Hom1Status
    forced_edges: set[int] = field(default_factory=set)
    reason: str = ""


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


def hom1_dim(g: Graph, H: Iterable[int], z: int) -> Hom1Verdict:
    """Decide forced edges for a module ``H`` whose only outside neighbor is ``z``.

    Each component of G[H] forms a leaf block with z, so only a star forest
    with at most one star containing a P3 can survive.
    """
    hs = set(H)
    for x in hs:
        if not g.has_edge(x, z) or any(w != z and w not in hs for w in g.adj[x]):
            raise NotHomogeneousSingleNeighbor(f"vertex {x} breaks N(H) = {{{z}}}")
    comps = _components(g, hs)
    stars = []  # centers of components containing a P3
    edges = []  # two-vertex components
    lone = []
    for comp in comps:
        k = len(comp)
        inner = {v: len(g.nbrs[v] & hs) for v in comp}
        m_inside = sum(inner.values()) // 2
        if m_inside != k - 1:
            return Hom1Verdict(Hom1Status.NO_DIM, reason="cycle inside module")
        if k == 1:
            lone.append(comp[0])
        elif k == 2:
            edges.append((comp[0], comp[1]))
        else:
            centers = [v for v in comp if inner[v] == k - 1]
            if not centers:
                return Hom1Verdict(Hom1Status.NO_DIM, reason="P4 inside module")
            stars.append(centers[0])
    if len(stars) >= 2:
        return Hom1Verdict(Hom1Status.NO_DIM, reason="two stars with P3 in module")
    if stars:
        if edges:
            return Hom1Verdict(Hom1Status.NO_DIM, reason="star with P3 next to another edge")
        return Hom1Verdict(Hom1Status.CONTINUE, {g.edge_id(stars[0], z)})
    if len(edges) >= 2:
        if lone:
            return Hom1Verdict(Hom1Status.NO_DIM, reason="edges and isolated vertices in module")
        return Hom1Verdict(Hom1Status.CONTINUE, {g.edge_id(a, b) for a, b in edges})
    if len(edges) == 1:
        a, b = edges[0]
        if not lone:
            return Hom1Verdict(Hom1Status.POSTPONED_TRIANGLE_LEAF)
        pick = a if g.edge_weight(a, z) <= g.edge_weight(b, z) else b
        return Hom1Verdict(Hom1Status.CONTINUE, {g.edge_id(pick, z)})
    return Hom1Verdict(Hom1Status.POSTPONED_STABLE_FRINGE)


@dataclass(frozen=True)
class TriangleLeaf:
    a: int
    b: int
    cut: int
    w_ab: float
    w_ac: float
    w_bc: float


def triangle_leaf_blocks(g: Graph) -> list[TriangleLeaf]:
    """Triangle blocks holding exactly one cut vertex; the other two have degree 2."""
    bt = blocks(g)
    out = []
    for i in bt.leaf_blocks:
        blk = bt.blocks[i]
        if len(blk) != 3:
            continue
        cuts = [v for v in blk if v in bt.cut_vertices]
        if len(cuts) != 1:
            continue
        c = cuts[0]
        a, b = sorted(v for v in blk if v != c)
        out.append(TriangleLeaf(a, b, c, g.edge_weight(a, b), g.edge_weight(a, c), g.edge_weight(b, c)))
    return out


def strip_triangle_leaf_blocks(g: Graph) -> tuple[Graph, list[int], list[TriangleLeaf]]:
    """G* and the stripped triangles; ``old_ids[i]`` is the host id of G* vertex i."""
    leaves = triangle_leaf_blocks(g)
    gone = set()
    for t in leaves:
        gone.add(t.a)
        gone.add(t.b)
    sub, old = g.induced_subgraph([v for v in range(g.n) if v not in gone])
    return sub, old, leaves


def tr_transform_with_lift(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Tr(G) plus a map from each Tr(G) edge id to the host edge it stands for.

    Triangle a, b, c (cut vertex c) becomes the path a - b - c with w(ab) kept
    and w(bc) := min(w(ac), w(bc)); the edge ac disappears.  Vertex ids stay.
    """
    leaves = triangle_leaf_blocks(g)
    drop = set()
    reweight: dict[int, tuple[float, int]] = {}
    for t in leaves:
        drop.add(g.edge_id(t.a, t.cut))
        bc = g.edge_id(t.b, t.cut)
        if t.w_ac < t.w_bc:
            reweight[bc] = (t.w_ac, g.edge_id(t.a, t.cut))
        else:
            reweight[bc] = (t.w_bc, bc)
    edges = []
    lift = {}
    for e, (u, v, w) in enumerate(g.edges):
        if e in drop:
            continue
        source = e
        if e in reweight:
            w, source = reweight[e]
        lift[len(edges)] = source
        edges.append((u, v, w))
    return Graph(g.n, edges), lift


def tr_transform(g: Graph) -> Graph:
    return tr_transform_with_lift(g)[0]
