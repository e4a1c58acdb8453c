import itertools
import random

import pytest

from canon import DIAMOND, PAW, cycle, named, path, v
from p7dim.graph import build_graph
from p7dim.outcome import Solved
from p7dim.testkit import oracle_dim
from p7dim.modular import (
    NotCoConnected,
    NotConnected,
    is_homogeneous,
    maximal_homogeneous_sets,
    true_twin_edges,
)


def brute_maximal_modules(g):
    mods = [set(h) for r in range(2, g.n) for h in itertools.combinations(range(g.n), r) if is_homogeneous(g, h)]
    return sorted(sorted(h) for h in mods if not any(h < k for k in mods))


def test_diamond_modules():
    g = named(DIAMOND)
    part = maximal_homogeneous_sets(g, allow_series=True)
    assert part.modules == [[v("a"), v("d")], [v("b"), v("c")]]
    assert part.outside_neighborhood == [[v("b"), v("c")], [v("a"), v("d")]]
    assert all(is_homogeneous(g, h) for h in part.modules)


def test_p4_is_prime():
    part = maximal_homogeneous_sets(path(4))
    assert part.modules == []
    assert part.prime_rest == [0, 1, 2, 3]


def test_paw_module():
    g = named(PAW)
    with pytest.raises(NotCoConnected):
        maximal_homogeneous_sets(g)
    # a is universal, so {b, c, d} is homogeneous and contains the twin pair {b, c}
    mods = [sorted(h) for r in range(2, 4) for h in itertools.combinations(range(4), r) if is_homogeneous(g, h)]
    assert mods == [[v("b"), v("c")], [v("b"), v("c"), v("d")]]
    assert maximal_homogeneous_sets(g, allow_series=True).modules == [[v("b"), v("c"), v("d")]]


def test_preconditions():
    with pytest.raises(NotConnected):
        maximal_homogeneous_sets(named("ab cd"))
    with pytest.raises(NotCoConnected):
        maximal_homogeneous_sets(cycle(4))


def test_true_twin_edges():
    g = named(DIAMOND)
    assert true_twin_edges(g, maximal_homogeneous_sets(g, allow_series=True)) == {g.edge_id(v("b"), v("c"))}
    c4 = cycle(4)
    part = maximal_homogeneous_sets(c4, allow_series=True)
    assert part.modules == [[0, 2], [1, 3]]
    assert true_twin_edges(c4, part) == set()
    # C5 plus a true twin of one vertex
    h = named("ab bc cd de ea fa fb fe")
    part = maximal_homogeneous_sets(h)
    assert part.modules == [[v("a"), v("f")]]
    assert true_twin_edges(h, part) == {h.edge_id(v("a"), v("f"))}


def test_maximal_modules_match_definition():
    rng = random.Random(17)
    checked = 0
    for _ in range(600):
        n = rng.randint(4, 9)
        p = rng.random()
        g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        try:
            part = maximal_homogeneous_sets(g)
        except (NotConnected, NotCoConnected):
            continue
        checked += 1
        assert part.modules == brute_maximal_modules(g)
        for h, nh in zip(part.modules, part.outside_neighborhood):
            hs = set(h)
            assert nh == sorted(w for w in range(g.n) if w not in hs and g.has_edge(w, h[0]))
        covered = sorted(x for h in part.modules for x in h) + part.prime_rest
        assert sorted(covered) == list(range(g.n))
    assert checked > 100


def test_modules_of_graphs_with_dim_follow_corollary():
    # a module with an edge has a stable neighborhood; with two or more
    # neighbors it is stable or a disjoint union of edges
    rng = random.Random(19)
    seen = 0
    for _ in range(3000):
        n = rng.randint(4, 9)
        g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4])
        try:
            part = maximal_homogeneous_sets(g)
        except (NotConnected, NotCoConnected):
            continue
        if not isinstance(oracle_dim(g), Solved):
            continue
        for h, nh in zip(part.modules, part.outside_neighborhood):
            hs = set(h)
            inner = [len(g.nbrs[x] & hs) for x in h]
            if any(inner):
                seen += 1
                assert not any(g.has_edge(a, b) for a, b in itertools.combinations(nh, 2))
                if len(nh) >= 2:
                    assert all(d == 1 for d in inner)
    assert seen > 20
