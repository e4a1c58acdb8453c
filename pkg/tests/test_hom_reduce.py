import itertools
import random

import pytest

from canon import PAW, complete, cycle, named, v
from p7dim.graph import build_graph
from p7dim.hom_reduce import (
    Hom1Status,
    NotHomogeneousSingleNeighbor,
    hom1_dim,
    strip_triangle_leaf_blocks,
    tr_transform,
    tr_transform_with_lift,
    triangle_leaf_blocks,
)
from p7dim.outcome import Solved
from p7dim.testkit import naive_check_dim, oracle_dim
from p7dim.verify import MatchingSet, check_dim

Z = 0


def with_module(inner: str, size: int, weights=None):
    """Vertex 0 is z, vertex 1 hangs off z, vertices 2.. form H (letters c..)."""
    edges = [(0, 1, 1.0)] + [(0, 2 + i, 1.0) for i in range(size)]
    g0 = named(inner, n=2 + size, weights=weights) if inner else build_graph(2 + size, [])
    return build_graph(2 + size, edges + list(g0.edges)), list(range(2, 2 + size))


def test_p3_module_forces_center_edge():
    g, H = with_module("cd de", 3)
    verdict = hom1_dim(g, H, Z)
    assert verdict.status is Hom1Status.CONTINUE
    assert verdict.forced_edges == {g.edge_id(0, v("d"))}


def test_edge_plus_vertex_picks_cheaper_side():
    base, H = with_module("cd", 3)
    g = base.with_weights({base.edge_id(0, v("c")): 9.0, base.edge_id(0, v("d")): 2.0})
    verdict = hom1_dim(g, H, Z)
    assert verdict.status is Hom1Status.CONTINUE
    assert verdict.forced_edges == {g.edge_id(0, v("d"))}


def test_cycle_or_p4_in_module_has_no_dim():
    g, H = with_module("cd de ef cf", 4)
    assert hom1_dim(g, H, Z).status is Hom1Status.NO_DIM
    g, H = with_module("cd de ef", 4)
    assert hom1_dim(g, H, Z).status is Hom1Status.NO_DIM


def test_other_cases():
    g, H = with_module("cd ef", 4)
    assert hom1_dim(g, H, Z).forced_edges == {g.edge_id(2, 3), g.edge_id(4, 5)}
    g, H = with_module("cd ef", 5)
    assert hom1_dim(g, H, Z).status is Hom1Status.NO_DIM
    g, H = with_module("cd de fg gh", 6)
    assert hom1_dim(g, H, Z).status is Hom1Status.NO_DIM
    g, H = with_module("cd de fg", 5)
    assert hom1_dim(g, H, Z).status is Hom1Status.NO_DIM
    g, H = with_module("cd", 2)
    assert hom1_dim(g, H, Z).status is Hom1Status.POSTPONED_TRIANGLE_LEAF
    g, H = with_module("", 3)
    assert hom1_dim(g, H, Z).status is Hom1Status.POSTPONED_STABLE_FRINGE


def test_rejects_non_module():
    g = named("ab ac bc cd")
    with pytest.raises(NotHomogeneousSingleNeighbor):
        hom1_dim(g, [v("a"), v("d")], v("c"))


def best_with(g, forced):
    best = None
    for r in range(g.m + 1):
        for s in itertools.combinations(range(g.m), r):
            if forced <= set(s) and naive_check_dim(g, s):
                w = sum(g.weight(e) for e in s)
                best = w if best is None else min(best, w)
    return best


def test_hom1_verdicts_against_oracle():
    rng = random.Random(31)
    for _ in range(1500):
        k, h = rng.randint(1, 5), rng.randint(2, 4)
        p = rng.random()
        edges = [(a, b, rng.randint(1, 9)) for a in range(k) for b in range(a + 1, k) if rng.random() < p]
        edges += [(k + a, k + b, rng.randint(1, 9)) for a in range(h) for b in range(a + 1, h) if rng.random() < 0.4]
        edges += [(0, k + a, rng.randint(1, 9)) for a in range(h)]
        g = build_graph(k + h, edges)
        if g.m > 12:
            continue
        verdict = hom1_dim(g, list(range(k, k + h)), 0)
        ref = oracle_dim(g)
        if verdict.status is Hom1Status.NO_DIM:
            assert not isinstance(ref, Solved)
        elif verdict.status is Hom1Status.CONTINUE and isinstance(ref, Solved):
            assert best_with(g, verdict.forced_edges) == ref.weight


def test_strip_examples():
    star, old, leaves = strip_triangle_leaf_blocks(named(PAW))
    assert old == [v("a"), v("d")] and star.m == 1
    assert [(t.a, t.b, t.cut) for t in leaves] == [(v("b"), v("c"), v("a"))]
    c6, old, leaves = strip_triangle_leaf_blocks(cycle(6))
    assert c6 == cycle(6) and leaves == []
    two_paws = named("ab ac bc ad de df ef")
    star, old, leaves = strip_triangle_leaf_blocks(two_paws)
    assert old == [v("a"), v("d")] and len(leaves) == 2


def test_tr_paw_example():
    # triangle a, b, c with cut vertex a; pendant d at a
    g = named(PAW, weights={"bc": 5, "ab": 2, "ac": 3})
    tr, lift = tr_transform_with_lift(g)
    assert tr.m == 3
    assert tr.edge_weight(v("b"), v("c")) == 5
    assert tr.edge_weight(v("c"), v("a")) == 2
    assert not tr.has_edge(v("a"), v("b"))
    assert lift[tr.edge_id(v("a"), v("c"))] == g.edge_id(v("a"), v("b"))


def test_tr_identity_cases():
    assert tr_transform(cycle(6)) == cycle(6)
    assert tr_transform(complete(3)) == complete(3)
    assert triangle_leaf_blocks(complete(3)) == []


def test_tr_preserves_optimum():
    rng = random.Random(37)
    hits = 0
    for _ in range(2500):
        n = rng.randint(4, 9)
        g = build_graph(n, [(i, j, rng.randint(1, 9)) for i in range(n) for j in range(i + 1, n) if rng.random() < rng.random()])
        if not triangle_leaf_blocks(g):
            continue
        hits += 1
        tr, lift = tr_transform_with_lift(g)
        a, b = oracle_dim(g), oracle_dim(tr)
        assert type(a) is type(b)
        if isinstance(b, Solved):
            assert a.weight == b.weight
            ms = MatchingSet.of(g, [lift[e] for e in b.matching.edge_ids])
            assert check_dim(g, ms) and ms.total_weight == b.weight
    assert hits > 50
