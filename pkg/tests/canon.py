"""Small named graphs used across the tests.

Vertices are written as letters (a = 0, b = 1, ...), edges as two-letter words.
"""
from __future__ import annotations

from typing import Optional

from p7dim.graph import Graph, build_graph


def v(name: str) -> int:
    return ord(name) - ord("a")


def named(edges: str, n: Optional[int] = None, weights: Optional[dict[str, float]] = None) -> Graph:
    weights = weights or {}
    pairs = edges.split()
    top = max((v(ch) for p in pairs for ch in p), default=-1) + 1
    return build_graph(n if n is not None else top, [(v(p[0]), v(p[1]), weights.get(p, 1.0)) for p in pairs])


def path(n: int, w: float = 1.0) -> Graph:
    return build_graph(n, [(i, i + 1, w) for i in range(n - 1)])


def cycle(n: int, w: float = 1.0) -> Graph:
    return build_graph(n, [(i, (i + 1) % n, w) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j, 1.0) for i in range(n) for j in range(i + 1, n)])


def edge_names(g: Graph, ids) -> set[str]:
    out = set()
    for e in ids:
        a, b = g.endpoints(e)
        out.add(chr(ord("a") + a) + chr(ord("a") + b))
    return out


PAW = "ab ac bc ad"  # triangle abc, pendant d at a
DIAMOND = "ab ac bc bd cd"  # mid-edge bc
DOMINO = "ab bc cd de ef af be"  # two C4s sharing be
GEM = "ab bc cd ae be ce de"  # P4 abcd plus universal e
W4 = "ab bc cd ad ae be ce de"  # C4 plus hub e
BULL = "ab bc ac bd ce"
