"""Plain-text edge lists.

Format: a header line ``n m directed|undirected`` followed by ``m`` lines
``u v [weight]`` with 0-based node indices.  The weight is a nonnegative
decimal and defaults to 1.  Undirected input becomes two directed edges
with the same weight.  Blank lines and lines starting with ``#`` are
ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, TextIO

from .errors import InputError
from .kernel import AdjListGraph


@dataclass
class EdgeList:
    graph: AdjListGraph
    weight: list          # indexed by edge handle
    directed: bool

    def weight_of(self, e: Any) -> Any:
        return self.weight[e]


def _number(tok: str, lineno: int) -> int | float:
    try:
        x = int(tok)
    except ValueError:
        try:
            x = float(tok)
        except ValueError:
            raise InputError(f"line {lineno}: {tok!r} is not a number") from None
    if x < 0:
        raise InputError(f"line {lineno}: negative weight {tok}")
    return x


def parse_edge_list(text: str) -> EdgeList:
    lines = [(k + 1, ln.split()) for k, ln in enumerate(text.splitlines())]
    lines = [(k, toks) for k, toks in lines if toks and not toks[0].startswith("#")]
    if not lines:
        raise InputError("empty edge list")
    lineno, head = lines[0]
    if len(head) != 3 or head[2] not in ("directed", "undirected"):
        raise InputError(f"line {lineno}: header must be 'n m directed|undirected'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise InputError(f"line {lineno}: node and edge counts must be integers") from None
    if n < 0 or m < 0:
        raise InputError(f"line {lineno}: counts must be nonnegative")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"header announces {m} edges but {len(body)} follow")
    directed = head[2] == "directed"
    g = AdjListGraph(n)
    weight: list = []
    for lineno, toks in body:
        if len(toks) not in (2, 3):
            raise InputError(f"line {lineno}: expected 'u v [weight]'")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise InputError(f"line {lineno}: node indices must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: node index out of range 0..{n - 1}")
        w = _number(toks[2], lineno) if len(toks) == 3 else 1
        g.new_edge(u, v)
        weight.append(w)
        if not directed:
            g.new_edge(v, u)
            weight.append(w)
    return EdgeList(g, weight, directed)


def read_edge_list(path: str | Path) -> EdgeList:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def write_edge_list(out: TextIO, graph: Any, weight: Any = None) -> None:
    """Write ``graph`` as a directed edge list; nodes are renumbered by node order."""
    index = {v: k for k, v in enumerate(graph.nodes())}
    edges = list(graph.edges())
    out.write(f"{len(index)} {len(edges)} directed\n")
    for e in edges:
        s, t = index[graph.source(e)], index[graph.target(e)]
        if weight is None:
            out.write(f"{s} {t}\n")
        else:
            out.write(f"{s} {t} {weight(e)}\n")
