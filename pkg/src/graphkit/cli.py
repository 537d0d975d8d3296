"""Command line: ``graphkit run|gen|bench|trace``.

Results are written one value per line:

* ``bfs``, ``dfs``: nodes in the order the search processes them;
* ``topo``: a topological order;
* ``scc``: the component number of each node, in node order;
* ``dijkstra``: the distance of each node from the source, in node order
  (``inf`` when unreachable);
* ``matching``: the cardinality, then one ``u v`` line per matched pair.
  Edges are read as undirected.

Graphs come from ``--input`` (edge-list file) or are generated from
``--n --m --seed`` as random directed graphs without parallel edges,
with random integer weights 1..100.  ``--backend complete`` needs only
``--n`` and uses edge length ``|s - t|``.

Exit status: 0 on success, 1 on bad input or usage, 2 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys
from typing import Any, Callable, TextIO

from .accessors import EDGE, HandlerAccessor, index_distance_length
from .algorithms import (BreadthFirstSearch, Dijkstra, SimpleDepthFirstSearch,
                         StronglyConnectedComponents, TopologicalSort, Tracer, bfs_order, dfs_order,
                         shortest_distances, strong_components, topological_order)
from .bench import ALGORITHMS as BENCH_ALGORITHMS
from .bench import run_grid, write_csv
from .errors import GraphKitError, InputError, InvariantError
from .generate import generate_random, random_weights
from .io import read_edge_list, write_edge_list
from .kernel import ImplicitCompleteGraph, compact_from
from .matching import MaximumMatching, symmetric_graph, undirected_pairs

ALGORITHMS = ("bfs", "dfs", "scc", "topo", "dijkstra", "matching")
BACKENDS = ("adjlist", "compact", "complete")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphkit", description="Run, trace and benchmark graph algorithms.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(sp):
        sp.add_argument("--input", help="edge-list file")
        sp.add_argument("--n", type=int, help="number of nodes to generate")
        sp.add_argument("--m", type=int, help="number of edges to generate")
        sp.add_argument("--seed", type=int, default=1)
        sp.add_argument("--backend", choices=BACKENDS, default="adjlist")
        sp.add_argument("--source", type=int, default=0)
        sp.add_argument("--output", help="write results here instead of stdout")

    r = sub.add_parser("run", help="run an algorithm and print its result")
    r.add_argument("--algo", choices=ALGORITHMS, required=True)
    graph_args(r)

    t = sub.add_parser("trace", help="print one row per algorithm step")
    t.add_argument("--algo", choices=ALGORITHMS, required=True)
    t.add_argument("--edge-labels", help="labels for the input edges, one character each in file order")
    graph_args(t)

    g = sub.add_parser("gen", help="write a random graph as an edge list")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--seed", type=int, default=1)
    g.add_argument("--output")

    b = sub.add_parser("bench", help="time generic algorithms against hand-written baselines")
    b.add_argument("--algo", choices=BENCH_ALGORITHMS, action="append",
                   help="restrict to this algorithm (repeatable)")
    b.add_argument("--n", type=int, default=1000)
    b.add_argument("--sizes", default="10000,100000,400000", help="comma-separated edge counts")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--output")
    return p


class _Loaded:
    """Graph, edge weights and original-edge labels for one command."""

    def __init__(self, graph: Any, weight: Any, edge_label: Callable[[Any], str] = str):
        self.graph = graph
        self.weight = weight
        self.edge_label = edge_label


def _load(args: argparse.Namespace, labels: str | None = None) -> _Loaded:
    if args.backend == "complete":
        if args.input is not None or args.n is None:
            raise InputError("the complete backend is built from --n alone")
        g = ImplicitCompleteGraph(args.n)
        return _Loaded(g, index_distance_length(g))
    if args.input is not None:
        el = read_edge_list(args.input)
        g, w = el.graph, el.weight
        if labels is not None:
            per_line = 1 if el.directed else 2
            if len(labels) * per_line != g.number_of_edges():
                raise InputError(f"{len(labels)} edge labels for {g.number_of_edges() // per_line} edges")
            names = [labels[e // per_line] for e in range(g.number_of_edges())]
        else:
            names = None
    elif args.n is not None and args.m is not None:
        g = generate_random(args.n, args.m, args.seed)
        w = random_weights(args.m, args.seed)
        names = None
        if labels is not None:
            raise InputError("--edge-labels needs --input")
    else:
        raise InputError("give --input, or --n and --m")
    if args.backend == "compact":
        cg = compact_from(g)
        origin = cg.edge_origin
        w = [w[origin[e]] for e in range(cg.number_of_edges())]
        if names is not None:
            names = [names[origin[e]] for e in range(cg.number_of_edges())]
        g = cg
    label = names.__getitem__ if names is not None else str
    return _Loaded(g, HandlerAccessor(w, EDGE), label)


def _check_source(g: Any, s: int) -> None:
    if not g.is_node(s):
        raise InputError(f"source {s} is not a node")


def _fmt(x: Any) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf"
        if x.is_integer():
            return str(int(x))
    return str(x)


def _matching_graph(g: Any) -> Any:
    index = {v: k for k, v in enumerate(g.nodes())}
    pairs = [(index[u], index[v]) for u, v in undirected_pairs(g)]
    return symmetric_graph(len(index), pairs)


def _run(args: argparse.Namespace, out: TextIO) -> None:
    ld = _load(args)
    g, algo = ld.graph, args.algo
    if algo in ("bfs", "dfs", "dijkstra"):
        _check_source(g, args.source)
    if algo == "bfs":
        lines = bfs_order(g, args.source)
    elif algo == "dfs":
        lines = dfs_order(g, args.source)
    elif algo == "topo":
        lines = topological_order(g)
    elif algo == "scc":
        comp = strong_components(g)
        lines = [comp[v] for v in g.nodes()]
    elif algo == "dijkstra":
        dist = shortest_distances(g, ld.weight, args.source)
        lines = [_fmt(dist[v]) for v in g.nodes()]
        if isinstance(g, ImplicitCompleteGraph):
            print(f"edge records allocated: {g.edge_records_allocated}", file=sys.stderr)
    else:
        m = MaximumMatching(_matching_graph(g)).run()
        lines = [len(m)] + [f"{u} {v}" for u, v in m.pairs()]
    for x in lines:
        out.write(f"{x}\n")


def _trace(args: argparse.Namespace, out: TextIO) -> None:
    ld = _load(args, args.edge_labels)
    g, algo = ld.graph, args.algo
    tr = Tracer(edge_label=ld.edge_label, write=lambda row: out.write(row + "\n"))
    if algo in ("bfs", "dfs", "dijkstra"):
        _check_source(g, args.source)
    if algo == "bfs":
        BreadthFirstSearch(g, args.source, tracer=tr).finish_algo()
    elif algo == "dfs":
        SimpleDepthFirstSearch(g, args.source, tracer=tr).finish_algo()
    elif algo == "scc":
        StronglyConnectedComponents(g, tracer=tr).finish_algo()
    elif algo == "topo":
        ts = TopologicalSort(g, tracer=tr).finish_algo()
        if ts.is_cyclic():
            raise InputError("graph has a cycle")
    elif algo == "dijkstra":
        d = Dijkstra(g, ld.weight, tracer=tr)
        d.seed(args.source)
        d.finish_algo()
    else:
        MaximumMatching(_matching_graph(g), tracer=tr).finish_algo()


def _gen(args: argparse.Namespace, out: TextIO) -> None:
    g = generate_random(args.n, args.m, args.seed)
    w = random_weights(args.m, args.seed)
    write_edge_list(out, g, w.__getitem__)


def _bench(args: argparse.Namespace, out: TextIO) -> None:
    try:
        sizes = tuple(int(x) for x in args.sizes.split(","))
    except ValueError:
        raise InputError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    algos = tuple(args.algo) if args.algo else BENCH_ALGORITHMS
    rows = run_grid(args.n, sizes, seed=args.seed, algorithms=algos, repeat=args.repeat,
                    progress=lambda r: print(f"{r.algo} {r.backend} m={r.m}: x{r.ratio:.2f}",
                                             file=sys.stderr))
    write_csv(out, rows)
    worst = max((r.ratio for r in rows if r.backend == "adjlist"), default=1.0)
    verdict = "within" if worst <= 3 else "above"
    print(f"all results equal; worst generic/baseline ratio {worst:.2f} ({verdict} the 3x sanity bound)",
          file=sys.stderr)


_COMMANDS = {"run": _run, "trace": _trace, "gen": _gen, "bench": _bench}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with contextlib.ExitStack() as stack:
            path = getattr(args, "output", None)
            out = sys.stdout if path is None else stack.enter_context(open(path, "w"))
            _COMMANDS[args.command](args, out)
    except InvariantError as exc:
        print(f"graphkit: internal error: {exc}", file=sys.stderr)
        return 2
    except (GraphKitError, OSError) as exc:
        print(f"graphkit: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
