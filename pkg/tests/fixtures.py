"""Small hand-built graphs shared by the tests."""

from __future__ import annotations

from graphkit.accessors import (EDGE, NODE, CalcAccessor, ComputedAccessor, FieldAccessor,
                                HandlerAccessor, edge_store)
from graphkit.kernel import AdjListGraph
from graphkit.matching import symmetric_graph

# Depth-first worked example: edges named a..f, inserted so that node 1
# lists c before d and node 4 lists f before b.
DFS_EDGES = {"a": (0, 1), "c": (1, 2), "d": (1, 3), "e": (3, 4), "f": (4, 5), "b": (4, 0)}
DFS_INSERTION = "acdefb"


def dfs_example() -> tuple[AdjListGraph, dict]:
    g = AdjListGraph(6)
    label = {}
    for name in DFS_INSERTION:
        label[g.new_edge(*DFS_EDGES[name])] = name
    return g, label


BFS_EDGES = [(0, 1), (0, 4), (1, 2), (1, 3), (4, 3), (4, 5)]


def bfs_example() -> AdjListGraph:
    return AdjListGraph(6, BFS_EDGES)


def one_based(n: int, edges) -> AdjListGraph:
    """Graph on nodes 1..n: node 0 is created and deleted so handles match the labels."""
    g = AdjListGraph(n + 1)
    g.del_node(0)
    for u, v in edges:
        g.new_edge(u, v)
    return g


# two 3-cycles joined by the edge 4 -> 3
CONTRACTION_EDGES = [(1, 2), (2, 3), (3, 1), (4, 3), (4, 5), (5, 6), (6, 4)]


def contraction_example() -> AdjListGraph:
    return one_based(6, CONTRACTION_EDGES)


def petersen_pairs() -> list[tuple[int, int]]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return outer + spokes + inner


def cycle_pairs(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


# alternating-path example on nodes 1..6 (node 0 isolated)
MATCHING_PATH_PAIRS = [(1, 2), (2, 3), (3, 6), (6, 5), (5, 4), (6, 2), (3, 5)]
MATCHING_PATH_BEFORE = [(2, 3), (5, 6)]

# nested-blossom example: searches from 0 and 1 augment directly, the search
# from 2 shrinks 2-1-4, then 5-0-(2-1-4), and reaches 3
NESTED_BLOSSOM_PAIRS = [(0, 5), (1, 4), (2, 1), (2, 4), (1, 5), (4, 0), (3, 0)]

# worked matching graphs: (name, node count, pairs)
WORKED_MATCHING = [
    ("alternating path", 7, MATCHING_PATH_PAIRS),
    ("flower", 7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)]),
    ("bipartite labeling", 6, [(0, 3), (0, 4), (1, 3), (2, 4), (2, 5)]),
    ("augment through blossom", 8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (2, 7)]),
    ("nested blossoms", 6, NESTED_BLOSSOM_PAIRS),
    ("nested blossoms, late exit", 6, [(0, 5), (1, 4), (2, 1), (2, 4), (1, 5), (4, 0), (3, 5)]),
    ("path via contracted blossom", 6, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]),
    ("blossom entered at base", 5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]),
    ("blossom entered off base", 7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6)]),
    ("path through blossom", 7, [(5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 6)]),
    ("contracted path", 3, [(0, 1), (1, 2)]),
]


def matching_graph(n: int, pairs) -> AdjListGraph:
    return symmetric_graph(n, pairs)


class _EdgeRecord:
    __slots__ = ("length",)

    def __init__(self, length):
        self.length = length


def length_realizations(g, pos) -> dict:
    """The edge length ``|pos[s] - pos[t]|`` delivered three ways: stored, as a record field, computed."""
    lengths = edge_store(g)
    for e in g.edges():
        lengths[e] = abs(pos[g.source(e)] - pos[g.target(e)])
    records = edge_store(g)
    for e in g.edges():
        records[e] = _EdgeRecord(lengths[e])
    return {
        "handler": HandlerAccessor(lengths, EDGE),
        "field": FieldAccessor(records, "length", EDGE),
        "calc": CalcAccessor(HandlerAccessor(pos, NODE),
                             ComputedAccessor(lambda e: pos[g.target(e)], EDGE),
                             lambda a, b: abs(a - b)),
    }
