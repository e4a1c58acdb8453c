"""Solve a handful of small named graphs and print each verdict."""
from p7dim import NoFiniteDim, NotP7Free, Solved, build_graph, solve


def cycle(k):
    return [(i, (i + 1) % k, 1) for i in range(k)]


GRAPHS = {
    "triangle": (3, cycle(3)),
    "C4": (4, cycle(4)),
    "C6": (6, cycle(6)),
    "paw": (4, [(0, 1, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]),
    "diamond": (4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]),
    "weighted C6": (6, [(0, 1, 5), (1, 2, 1), (2, 3, 1), (3, 4, 5), (4, 5, 1), (0, 5, 1)]),
    "P8": (8, [(i, i + 1, 1) for i in range(7)]),
}


def describe(g, out):
    if isinstance(out, Solved):
        edges = ", ".join(f"{u}-{v}" for u, v in out.matching.edges(g))
        return f"solved, weight {out.weight:g}: {edges}"
    if isinstance(out, NotP7Free):
        return "not P7-free, induced path " + "-".join(map(str, out.witness))
    assert isinstance(out, NoFiniteDim)
    return "no dominating induced matching"


if __name__ == "__main__":
    for name, (n, edges) in GRAPHS.items():
        g = build_graph(n, edges)
        print(f"{name:12s} {describe(g, solve(g))}")
