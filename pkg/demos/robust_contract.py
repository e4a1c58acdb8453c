"""Every verdict carries something checkable.

Random graphs are solved and each answer is checked independently: a Solved
matching with the verifier, a NotP7Free witness by testing that it induces a
path, and small graphs against the exhaustive oracle.
"""
import random

from p7dim import NotP7Free, Solved, check_dim, solve
from p7dim.graph import is_induced_path
from p7dim.testkit import find_induced_p7, gen_planted, gen_random, oracle_dim

if __name__ == "__main__":
    rng = random.Random(5)
    tally = {"solved": 0, "no_dim": 0, "not_p7_free": 0}
    for i in range(300):
        n = rng.randint(6, 12)
        g = gen_planted(n, 2.5, i).graph if i % 2 else gen_random(n, 0.3, i)
        out = solve(g)
        if isinstance(out, Solved):
            assert check_dim(g, out.matching)
            tally["solved"] += 1
        elif isinstance(out, NotP7Free):
            assert is_induced_path(g, out.witness)
            tally["not_p7_free"] += 1
        else:
            tally["no_dim"] += 1
        if find_induced_p7(g) is None:
            ref = oracle_dim(g)
            assert isinstance(ref, Solved) == isinstance(out, Solved)
            if isinstance(ref, Solved):
                assert ref.weight == out.weight
    print("300 graphs checked:", tally)
