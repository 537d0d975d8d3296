"""Loop-kernel algorithm objects and one-call helpers built on them."""

from __future__ import annotations

from typing import Any

from ..accessors import DataAccessor
from ..errors import CyclicInputError
from .base import AlgorithmObject, Tracer
from .dijkstra import Dijkstra, DijkstraPhase, PredecessorRecorder
from .scc import SccPhase, StronglyConnectedComponents
from .search import BreadthFirstSearch, DepthFirstSearch, DfsStep, SimpleDepthFirstSearch
from .topo import TopologicalSort

__all__ = [
    "AlgorithmObject", "Tracer",
    "BreadthFirstSearch", "SimpleDepthFirstSearch", "DepthFirstSearch", "DfsStep",
    "StronglyConnectedComponents", "SccPhase", "TopologicalSort",
    "Dijkstra", "DijkstraPhase", "PredecessorRecorder",
    "bfs_order", "dfs_order", "strong_components", "topological_order", "shortest_distances",
]


def _popped_order(alg: AlgorithmObject) -> list:
    order = []
    while not alg.finished():
        order.append(alg.current().node)
        alg.next()
    return order


def bfs_order(graph: Any, source: Any) -> list:
    """Nodes in the order breadth-first search processes them."""
    return _popped_order(BreadthFirstSearch(graph, source))


def dfs_order(graph: Any, source: Any) -> list:
    """Nodes in the order the stack-based depth-first search processes them."""
    return _popped_order(SimpleDepthFirstSearch(graph, source))


def strong_components(graph: Any) -> dict:
    """Map each node to its component number."""
    alg = StronglyConnectedComponents(graph).finish_algo()
    return {v: alg.component.handler[v] for v in graph.nodes()}


def topological_order(graph: Any) -> list:
    """A topological order of ``graph``; raises :class:`CyclicInputError` on a cycle."""
    alg = TopologicalSort(graph)
    order = []
    while not alg.finished():
        order.append(alg.next())
    if alg.is_cyclic():
        raise CyclicInputError(f"graph has a cycle: only {len(order)} of "
                               f"{graph.number_of_nodes()} nodes could be ordered")
    return order


def shortest_distances(graph: Any, length: DataAccessor, source: Any) -> dict:
    """Map each node to its distance from ``source`` (``inf`` when unreachable)."""
    alg = Dijkstra(graph, length)
    alg.seed(source)
    alg.finish_algo()
    store = alg.distance.da.handler
    return {v: store[v] for v in graph.nodes()}
