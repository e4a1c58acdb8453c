"""Command-line front end.

Graph files: a header ``n m`` followed by ``m`` lines ``u v [w]`` with 1-based
vertices; ``w`` defaults to 1.0 and may be ``inf``.  Lines starting with ``#``
and blank lines are ignored.  Matching files list ``u v`` pairs the same way
(no header).

Exit codes: 0 solved / valid, 10 no d.i.m., 20 not P7-free, 1 verify rejected,
2 parse or usage error, 3 input too large for the oracle.
"""
from __future__ import annotations

import argparse
import gc
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

from .graph import Graph, GraphError, build_graph
from .outcome import NotP7Free, Outcome, Solved
from .solver import solve
from .testkit import DEFAULT_GUARD, TooLarge, gen_cograph, gen_dh_bipartite, gen_planted, gen_random, oracle_dim
from .verify import dim_violation

EXIT_SOLVED = 0
EXIT_VERIFY_REJECTED = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_NO_DIM = 10
EXIT_NOT_P7_FREE = 20


class GraphFileError(ValueError):
    def __init__(self, line: int, message: str, path: str = "-"):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
        self.path = path

    def at(self, path: str) -> "GraphFileError":
        return GraphFileError(self.line, self.message, path)


@dataclass
class GraphFile:
    n: int
    edges: list[tuple[int, int, float]]  # 0-based endpoints

    def to_graph(self) -> Graph:
        return build_graph(self.n, self.edges)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _parse_weight(tok: str, no: int) -> float:
    if tok.lower() == "inf":
        return math.inf
    try:
        w = float(tok)
    except ValueError:
        raise GraphFileError(no, f"bad weight {tok!r}") from None
    if math.isnan(w) or w < 0:
        raise GraphFileError(no, f"weight must be >= 0 or inf, got {tok!r}")
    return w


def _parse_vertex(tok: str, n: int, no: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise GraphFileError(no, f"bad vertex {tok!r}") from None
    if not 1 <= v <= n:
        raise GraphFileError(no, f"vertex {v} outside [1, {n}]")
    return v - 1


def parse_graph_text(text: str) -> GraphFile:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFileError(1, "missing header 'n m'")
    no, head = lines[0]
    if len(head) != 2:
        raise GraphFileError(no, "header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFileError(no, "header must be two integers") from None
    if n < 0 or m < 0:
        raise GraphFileError(no, "negative header value")
    body = lines[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else no + 1)
        raise GraphFileError(at, f"header announces {m} edges, found {len(body)}")
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for no, toks in body:
        if len(toks) not in (2, 3):
            raise GraphFileError(no, "edge line must be 'u v [w]'")
        u, v = _parse_vertex(toks[0], n, no), _parse_vertex(toks[1], n, no)
        if u == v:
            raise GraphFileError(no, "loop edge")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFileError(no, f"duplicate of the edge on line {seen[key]}")
        seen[key] = no
        w = _parse_weight(toks[2], no) if len(toks) == 3 else 1.0
        edges.append((u, v, w))
    return GraphFile(n, edges)


def parse_matching_text(text: str, g: Graph) -> list[int]:
    ids = []
    for no, toks in _content_lines(text):
        if len(toks) != 2:
            raise GraphFileError(no, "matching line must be 'u v'")
        u, v = _parse_vertex(toks[0], g.n, no), _parse_vertex(toks[1], g.n, no)
        e = g.find_edge(u, v)
        if e is None:
            raise GraphFileError(no, f"{u + 1}-{v + 1} is not an edge")
        ids.append(e)
    return ids


def _fmt_weight(w: float) -> str:
    if math.isinf(w):
        return "inf"
    return str(int(w)) if float(w).is_integer() else repr(w)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u + 1} {v + 1} {_fmt_weight(w)}" for u, v, w in g.edges)
    return "\n".join(out) + "\n"


def _json_number(w: float):
    return int(w) if float(w).is_integer() else w


def result_document(g: Graph, out: Outcome) -> dict:
    if isinstance(out, Solved):
        edges = sorted([u + 1, v + 1] for u, v in out.matching.edges(g))
        return {"status": "solved", "edges": edges, "weight": _json_number(out.weight)}
    if isinstance(out, NotP7Free):
        return {"status": "not_p7_free", "witness": [v + 1 for v in out.witness]}
    return {"status": "no_dim"}


def exit_code(out: Outcome) -> int:
    if isinstance(out, Solved):
        return EXIT_SOLVED
    if isinstance(out, NotP7Free):
        return EXIT_NOT_P7_FREE
    return EXIT_NO_DIM


def _emit(doc: dict, fmt: str, stream: TextIO) -> None:
    if fmt == "json":
        stream.write(json.dumps(doc) + "\n")
        return
    for key, val in doc.items():
        if isinstance(val, list):
            val = " ".join("-".join(map(str, x)) if isinstance(x, list) else str(x) for x in val)
        stream.write(f"{key}\t{val}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph_text(_read(path)).to_graph()
    except GraphFileError as exc:
        raise exc.at(path) from None


# ---------------------------------------------------------------- commands


def cmd_solve(args: argparse.Namespace, stream: TextIO) -> int:
    g = _load_graph(args.graph)
    out = solve(g)
    _emit(result_document(g, out), args.format, stream)
    return exit_code(out)


def cmd_oracle(args: argparse.Namespace, stream: TextIO) -> int:
    g = _load_graph(args.graph)
    out = oracle_dim(g, guard_n=args.guard_n)
    _emit(result_document(g, out), args.format, stream)
    return exit_code(out)


def cmd_verify(args: argparse.Namespace, stream: TextIO) -> int:
    g = _load_graph(args.graph)
    try:
        ids = parse_matching_text(_read(args.matching), g)
    except GraphFileError as exc:
        raise exc.at(args.matching) from None
    if len(set(ids)) != len(ids):
        doc = {"valid": False, "reason": "duplicate edge in matching", "vertices": []}
        _emit(doc, args.format, stream)
        return EXIT_VERIFY_REJECTED
    bad = dim_violation(g, ids)
    if bad is None:
        _emit({"valid": True}, args.format, stream)
        return EXIT_SOLVED
    reason, verts = bad
    text = {
        "intersecting": "edges share a vertex",
        "distance-1": "distance-1 pair",
        "undominated": "edge {} undominated",
    }[reason]
    label = "".join(f"v{v + 1}" for v in verts)
    _emit({"valid": False, "reason": text.format(label), "vertices": [v + 1 for v in verts]}, args.format, stream)
    return EXIT_VERIFY_REJECTED


GENERATORS: dict[str, Callable[[int, int], Graph]] = {
    "planted": lambda n, seed: gen_planted(n, 4.0, seed).graph,
    "random": lambda n, seed: gen_random(n, 0.3, seed),
    "cograph": lambda n, seed: gen_cograph(n, seed),
    "dh-bipartite": lambda n, seed: gen_dh_bipartite(n, seed),
    "path": lambda n, seed: Graph(n, [(i, i + 1, 1.0) for i in range(n - 1)]),
    "cycle": lambda n, seed: Graph(n, [(i, i + 1, 1.0) for i in range(n - 1)] + [(0, n - 1, 1.0)]),
}


def cmd_gen(args: argparse.Namespace, stream: TextIO) -> int:
    stream.write(format_graph(GENERATORS[args.kind](args.n, args.seed)))
    return 0


def bench(sizes: Sequence[int], seed: int, repeats: int, avg_degree: float = 4.0) -> tuple[list[dict], float]:
    """Median solve time per size on planted instances and the fitted log-log slope."""
    rows = []
    for i, n in enumerate(sizes):
        g = gen_planted(n, avg_degree, seed + i).graph
        times = []
        for _ in range(repeats):
            # like timeit: a full collection first, no collector pauses while timing
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                out = solve(g)
                times.append(time.perf_counter() - t0)
            finally:
                gc.enable()
        rows.append({"n": n, "m": g.m, "seconds": statistics.median(times), "status": result_document(g, out)["status"]})
    exponent = math.nan
    if len(rows) >= 2:
        xs = [math.log(r["n"]) for r in rows]
        ys = [math.log(max(r["seconds"], 1e-9)) for r in rows]
        exponent = statistics.linear_regression(xs, ys).slope
    return rows, exponent


def cmd_bench(args: argparse.Namespace, stream: TextIO) -> int:
    rows, exponent = bench(args.sizes, args.seed, args.repeats)
    if args.format == "json":
        stream.write(json.dumps({"rows": rows, "exponent": exponent}) + "\n")
    else:
        stream.write("n\tm\tseconds\tstatus\n")
        for r in rows:
            stream.write(f"{r['n']}\t{r['m']}\t{r['seconds']:.6f}\t{r['status']}\n")
        stream.write(f"# fitted exponent {exponent:.3f}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--guard-n", type=int, default=DEFAULT_GUARD)

    p = argparse.ArgumentParser(prog="p7dim", description="Weighted dominating induced matchings in P7-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("solve", parents=[common], help="solve a graph file")
    s.add_argument("graph")
    s.set_defaults(func=cmd_solve)
    s = sub.add_parser("oracle", parents=[common], help="exhaustive search on a small graph file")
    s.add_argument("graph")
    s.set_defaults(func=cmd_oracle)
    s = sub.add_parser("verify", parents=[common], help="check that an edge set is a d.i.m.")
    s.add_argument("graph")
    s.add_argument("matching")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("gen", parents=[common], help="write a generated graph file")
    s.add_argument("kind", choices=sorted(GENERATORS))
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_gen)
    s = sub.add_parser("bench", parents=[common], help="time solve on planted instances")
    s.add_argument("--sizes", type=int, nargs="+", default=[2**k for k in range(10, 15)])
    s.add_argument("--repeats", type=int, default=5)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None, stream: Optional[TextIO] = None) -> int:
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stream)
    except GraphFileError as exc:
        print(f"{exc.path}:{exc.line}: {exc.message}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
