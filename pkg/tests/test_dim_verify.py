import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from canon import DIAMOND, PAW, cycle, named, path, v
from p7dim.graph import build_graph
from p7dim.testkit import naive_check_dim
from p7dim.verify import (
    MatchingSet,
    NotInducedMatching,
    check_dim,
    check_induced_matching,
    dim_violation,
    matching_weight,
    reduce,
)


def ids(g, *pairs):
    return {g.edge_id(v(p[0]), v(p[1])) for p in pairs}


def test_c6_opposite_edges():
    g = cycle(6)
    s = {g.edge_id(0, 1), g.edge_id(3, 4)}
    assert check_induced_matching(g, s)
    assert check_dim(g, s)
    assert naive_check_dim(g, s)


def test_p4_outer_edges_not_induced():
    g = path(4)
    s = {g.edge_id(0, 1), g.edge_id(2, 3)}
    assert not check_induced_matching(g, s)
    assert dim_violation(g, s) == ("distance-1", (1, 2))


def test_empty_set():
    assert check_induced_matching(cycle(5), set())
    assert check_dim(build_graph(3, []), set())
    assert not check_dim(path(2), set())


def test_c4_single_edge_leaves_opposite_edge():
    g = named("ab bc cd ad")
    s = ids(g, "ab")
    assert not check_dim(g, s)
    assert dim_violation(g, s) == ("undominated", (v("c"), v("d")))


def test_paw_edge_ab():
    g = named(PAW)
    assert check_dim(g, ids(g, "ab"))
    assert not check_dim(g, ids(g, "bc"))


def test_intersecting_edges_rejected():
    g = path(3)
    assert dim_violation(g, {0, 1}) == ("intersecting", (1,))


def test_matching_weight():
    g = named("ab cd", weights={"ab": 3, "cd": 4})
    assert matching_weight(g, set()) == 0
    assert matching_weight(g, {0, 1}) == 7
    h = named("ab bc", weights={"bc": math.inf})
    assert math.isinf(matching_weight(h, {1}))
    assert MatchingSet.of(g, [0, 1]).total_weight == 7


def test_reduce_diamond_mid_edge():
    g = named(DIAMOND)
    red = reduce(g, ids(g, "bc"))
    assert red.reduced_graph.n == 2 and red.reduced_graph.m == 0
    assert red.old_of == [v("a"), v("d")]
    assert red.red_vertices == {0, 1}


def test_reduce_p5():
    g = path(5)
    red = reduce(g, {g.edge_id(2, 3)})
    rg = red.reduced_graph
    assert red.old_of == [0, 1, 4]
    assert rg.m == 1 and math.isinf(rg.edge_weight(0, 1))
    assert red.red_vertices == {red.vertex_map[1], red.vertex_map[4]}
    assert red.infinity_edges == {0}


def test_reduce_empty_is_identity():
    g = named(PAW, weights={"ab": 2})
    red = reduce(g, set())
    assert red.reduced_graph == g
    assert not red.red_vertices


def test_reduce_rejects_non_induced():
    g = path(4)
    with pytest.raises(NotInducedMatching):
        reduce(g, {0, 2})


def test_check_dim_agrees_with_definition_random():
    rng = random.Random(11)
    for _ in range(2000):
        n = rng.randint(1, 10)
        g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.35])
        s = {e for e in range(g.m) if rng.random() < 0.3}
        assert check_dim(g, s) == naive_check_dim(g, s)
        assert (dim_violation(g, s) is None) == check_dim(g, s)


@st.composite
def graph_and_subset(draw):
    n = draw(st.integers(1, 9))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = build_graph(n, chosen)
    sub = draw(st.sets(st.integers(0, max(g.m - 1, 0)))) if g.m else set()
    return g, sub


@settings(max_examples=300, deadline=None)
@given(graph_and_subset())
def test_check_dim_property(case):
    g, s = case
    assert check_dim(g, s) == naive_check_dim(g, s)
