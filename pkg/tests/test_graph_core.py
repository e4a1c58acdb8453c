import random

import networkx as nx
import pytest

from canon import PAW, cycle, named, path, v
from p7dim.graph import (
    DuplicateEdge,
    LoopEdge,
    NegativeWeight,
    VertexOutOfRange,
    bfs_levels,
    bipartition,
    blocks,
    build_graph,
    complement_components,
    connected_components,
    is_induced_cycle,
    is_induced_path,
    shortest_path,
)


def random_graph(rng: random.Random, n: int, p: float):
    return build_graph(n, [(i, j, 1.0) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def test_build_c4():
    g = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    assert g.m == 4
    assert all(g.degree(x) == 2 for x in range(4))
    assert g.edge_id(3, 0) == g.edge_id(0, 3)


def test_single_vertex():
    g = build_graph(1, [])
    assert (g.n, g.m) == (1, 0)


def test_default_weight_and_inf():
    g = build_graph(3, [(0, 1), (1, 2, "inf")])
    assert g.edge_weight(0, 1) == 1.0
    assert g.edge_weight(2, 1) == float("inf")


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (2, [(0, 1, 1), (0, 1, 2)], DuplicateEdge),
        (2, [(0, 1, 1), (1, 0, 2)], DuplicateEdge),
        (2, [(1, 1, 1)], LoopEdge),
        (2, [(0, 2, 1)], VertexOutOfRange),
        (2, [(0, 1, -1)], NegativeWeight),
        (2, [(0, 1, float("nan"))], NegativeWeight),
    ],
)
def test_build_rejects(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_bfs_p7_from_end():
    lv = bfs_levels(path(7), [0])
    assert lv.level(6) == [6]
    assert lv.depth == 6


def test_bfs_c6_from_edge():
    lv = bfs_levels(cycle(6), [0, 1])
    assert lv.level(1) == [2, 5]
    assert lv.level(2) == [3, 4]


def test_bfs_paw_from_pendant():
    lv = bfs_levels(named(PAW), [v("d")])
    assert lv.level(1) == [v("a")]
    assert lv.level(2) == [v("b"), v("c")]


def test_bfs_levels_differ_by_at_most_one():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 12), rng.random())
        lv = bfs_levels(g, [rng.randrange(g.n)])
        for a, b, _ in g.edges:
            if lv.level_of[a] >= 0:
                assert abs(lv.level_of[a] - lv.level_of[b]) <= 1


def test_components_examples():
    assert len(connected_components(named("ab cd"))) == 2
    assert len(connected_components(cycle(5))) == 1
    assert len(connected_components(build_graph(3, []))) == 3


def test_components_match_networkx():
    rng = random.Random(5)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 14), rng.random() * 0.4)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from((a, b) for a, b, _ in g.edges)
        ours = sorted(map(tuple, connected_components(g)))
        theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(h))
        assert ours == theirs
        co = sorted(map(tuple, complement_components(g)))
        co_theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(nx.complement(h)))
        assert co == co_theirs


def test_blocks_paw():
    bt = blocks(named(PAW))
    assert sorted(map(sorted, bt.blocks)) == [[0, 1, 2], [0, 3]]
    assert bt.cut_vertices == {v("a")}
    assert len(bt.leaf_blocks) == 2


def test_blocks_c6_and_p4():
    bt = blocks(cycle(6))
    assert len(bt.blocks) == 1 and not bt.cut_vertices
    bt = blocks(path(4))
    assert len(bt.blocks) == 3 and bt.cut_vertices == {1, 2}


def test_block_edges_partition_edge_set():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 14), rng.random() * 0.5)
        bt = blocks(g)
        seen = [e for blk in bt.block_edges for e in blk]
        assert sorted(seen) == list(range(g.m))
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from((a, b) for a, b, _ in g.edges)
        assert bt.cut_vertices == set(nx.articulation_points(h))


def test_bipartition_examples():
    assert bipartition(cycle(6))[0] is not None
    color, odd = bipartition(cycle(5))
    assert color is None and len(odd) % 2 == 1
    assert bipartition(build_graph(1, []))[0] == [0]


def test_shortest_path_and_predicates():
    g = cycle(8)
    p = shortest_path(g, 0, 4, allowed={0, 1, 2, 3, 4})
    assert p == [0, 1, 2, 3, 4]
    assert is_induced_path(g, p)
    assert is_induced_cycle(g, list(range(8)))
    assert not is_induced_cycle(named("ab bc ca cd da"), [0, 1, 2, 3])
    assert shortest_path(g, 0, 4, allowed={0, 1, 4}) is None
