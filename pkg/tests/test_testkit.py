import itertools
import random

import pytest

from canon import DIAMOND, GEM, PAW, W4, complete, cycle, named, path
from p7dim.bipartite import dh_bipartite_check
from p7dim.cograph import is_cograph
from p7dim.graph import build_graph, is_induced_cycle, is_induced_path
from p7dim.outcome import NoFiniteDim, Solved
from p7dim.testkit import (
    TooLarge,
    edge_anchored_solve,
    find_induced_p7,
    forbidden_subgraph,
    gen_cograph,
    gen_dh_bipartite,
    gen_planted,
    gen_random,
    induced_cycles,
    naive_check_dim,
    oracle_dim,
    structural_violations,
)
from p7dim.verify import MatchingSet, check_dim


def subset_brute(g):
    best = None
    for r in range(g.m + 1):
        for s in itertools.combinations(range(g.m), r):
            if naive_check_dim(g, s):
                w = sum(g.weight(e) for e in s)
                best = w if best is None else min(best, w)
    return best


def test_oracle_examples():
    assert oracle_dim(named("ab bc ac", weights={"ab": 1, "bc": 2, "ac": 3})).weight == 1
    assert isinstance(oracle_dim(cycle(7)), NoFiniteDim)
    assert oracle_dim(cycle(6)).weight == 2


def test_oracle_guard():
    with pytest.raises(TooLarge):
        oracle_dim(path(17))
    assert isinstance(oracle_dim(path(17), guard_n=20), Solved)


def test_oracle_matches_edge_subset_search():
    rng = random.Random(23)
    for _ in range(400):
        n = rng.randint(1, 8)
        g = build_graph(n, [(i, j, rng.randint(1, 9)) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45])
        if g.m > 13:
            continue
        out = oracle_dim(g)
        assert (out.weight if isinstance(out, Solved) else None) == subset_brute(g)
        assert type(oracle_dim(g, prefilter=True)) is type(out)


def test_find_induced_p7():
    assert find_induced_p7(path(7)) in ((0, 1, 2, 3, 4, 5, 6), (6, 5, 4, 3, 2, 1, 0))
    assert find_induced_p7(cycle(7)) is None
    assert find_induced_p7(cycle(6)) is None
    w = find_induced_p7(cycle(9))
    assert w is not None and is_induced_path(cycle(9), w)


def test_p7_and_cycle_search_match_permutations():
    rng = random.Random(29)
    for _ in range(120):
        n = rng.randint(5, 8)
        g = build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < rng.random()])
        has = n >= 7 and any(is_induced_path(g, q) for q in itertools.permutations(range(n), 7))
        assert (find_induced_p7(g) is not None) == has
        ours = sorted(map(tuple, induced_cycles(g, 7)))
        brute = set()
        for k in range(3, min(n, 7) + 1):
            for q in itertools.permutations(range(n), k):
                if q[0] == min(q) and q[1] < q[-1] and is_induced_cycle(g, q):
                    brute.add(q)
        assert ours == sorted(brute)


def test_edge_anchored_examples():
    assert edge_anchored_solve(named(PAW)).weight == oracle_dim(named(PAW)).weight
    assert edge_anchored_solve(cycle(6)).weight == 2
    assert isinstance(edge_anchored_solve(cycle(4)), NoFiniteDim)
    assert edge_anchored_solve(named(DIAMOND)).matching.edge_ids == {named(DIAMOND).edge_id(1, 2)}


def test_forbidden_subgraphs():
    assert forbidden_subgraph(complete(4)) == "K4"
    assert forbidden_subgraph(named(W4)) == "W4"
    assert forbidden_subgraph(named(GEM)) == "gem"
    assert forbidden_subgraph(cycle(6)) is None


def test_planted_instances():
    for seed in range(30):
        inst = gen_planted(40, 3.0, seed)
        g = inst.graph
        assert check_dim(g, inst.planted)
        matched = {x for e in inst.planted.edge_ids for x in g.endpoints(e)}
        for e, (a, b, _) in enumerate(g.edges):
            # no I-I edge and no edge between different matching pairs
            assert a in matched or b in matched
            if a in matched and b in matched:
                assert e in inst.planted.edge_ids
    tiny = gen_planted(2, 4.0, 0)
    assert tiny.graph.m == 1 and tiny.planted.edge_ids == {0}


def test_generators_are_deterministic():
    assert gen_planted(30, 4.0, 5).graph.edges == gen_planted(30, 4.0, 5).graph.edges
    assert gen_random(12, 0.3, 5).edges == gen_random(12, 0.3, 5).edges
    assert gen_cograph(9, 5).edges == gen_cograph(9, 5).edges
    assert gen_dh_bipartite(30, 5).edges == gen_dh_bipartite(30, 5).edges


def test_generator_classes():
    for seed in range(200):
        assert is_cograph(gen_cograph(1 + seed % 12, seed))[0]
        g = gen_dh_bipartite(2 + seed % 40, seed)
        assert dh_bipartite_check(g) is None
        h = gen_dh_bipartite(2 + seed % 40, seed, max_depth=2)
        assert dh_bipartite_check(h) is None


def test_structural_violations_flags_bad_sets():
    g = cycle(6)
    assert structural_violations(g, MatchingSet.of(g, [0, 3])) == []
    assert structural_violations(g, MatchingSet.of(g, [0])) != []
    assert structural_violations(complete(4), MatchingSet.of(complete(4), [])) != []
