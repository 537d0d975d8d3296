"""Topological sorting by repeated removal of in-degree-zero nodes."""

from __future__ import annotations

from typing import Any

from ..accessors import BoundsDecorator, node_array
from ..iterators import InAdjIt, NodeIt, OutAdjIt
from ..structures import Queue
from .base import AlgorithmObject, Tracer


class TopologicalSort(AlgorithmObject):
    """Emits the nodes of a DAG so that every edge points forward.

    The constructor counts in-degrees into ``indeg`` and queues every node
    whose count equals ``indeg.value_null``.  Each ``next()`` removes the
    queue head (the emitted node, available beforehand as
    ``current().node``), decrements the counts of its out-neighbours and
    queues those that drop to ``value_null``.

    When the queue runs dry early the graph has a cycle:
    :meth:`is_cyclic` is then true and ``emitted < n``.
    """

    def __init__(self, graph: Any, *, indeg: BoundsDecorator | None = None,
                 iterator: type = OutAdjIt, tracer: Tracer | None = None):
        self.graph = graph
        self.indeg = indeg if indeg is not None else BoundsDecorator(node_array(graph, 0), 0)
        self.iterator = iterator
        self.tracer = tracer
        self.queue = Queue()
        self.emitted = 0
        self._count_indegrees()

    def _count_indegrees(self) -> None:
        g, indeg = self.graph, self.indeg
        null = indeg.value_null
        it = NodeIt(g)
        while it.valid():
            k = null
            ai = InAdjIt(g, it.node)
            while ai.valid():
                k += 1
                ai.succ()
            indeg.set(it, k)
            if k == null:
                self.queue.append(self.iterator(g, it.node))
            it.succ()

    def finished(self) -> bool:
        return self.queue.empty()

    def current(self) -> Any:
        return None if self.queue.empty() else self.queue.top()

    def is_cyclic(self) -> bool:
        """True once finished without having emitted every node."""
        return self.queue.empty() and self.emitted < self.graph.number_of_nodes()

    def next(self) -> Any:
        """Emit one node and return it."""
        q = self.queue
        if q.empty():
            raise self._finished_error()
        ai = q.pop()
        self.emitted += 1
        node = ai.node
        get, put = self.indeg.get, self.indeg.set
        null = self.indeg.value_null
        append = q.append
        while ai.valid():
            temp = ai.curr_adj()
            val = get(temp) - 1
            put(temp, val)
            if val == null:
                append(temp)
            ai.succ()
        tr = self.tracer
        if tr is not None:
            tr.emit(f"emit {tr.node_label(node)}", tr.container(q), "-", "emit", node)
        return node
