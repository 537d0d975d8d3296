"""Single-source shortest paths as a two-phase loop kernel, plus an external predecessor recorder."""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Callable

from ..accessors import BoundsDecorator, DataAccessor, node_array
from ..errors import InputError
from ..iterators import OutAdjIt
from ..structures import PriorityQueue
from .base import AlgorithmObject, Tracer


class DijkstraPhase(Enum):
    DEPTH = "depth"
    BREADTH = "breadth"


class Dijkstra(AlgorithmObject):
    """Dijkstra's algorithm, one edge per step.

    State is the priority queue of adjacency iterators keyed by tentative
    distance and ``active``, the iterator of the node being scanned, which
    always points at the next edge to relax.

    * depth phase (``active`` exhausted): extract the minimum node and relax
      its first out-edge;
    * breadth phase: relax the edge ``active`` points at.

    After relaxing, ``active`` moves to the following edge.  Relaxing edge
    ``(u, v)`` computes ``c = d(u) + w(u, v)``; if ``c < d(v)`` the distance
    is lowered and ``v`` is decreased in the queue when ``queue_item`` holds a
    handle for it, inserted otherwise.

    Initialization is the caller's: ``distance`` must read ``value_max`` for
    every node (the default store does) and sources are added with
    :meth:`seed`.
    """

    def __init__(self, graph: Any, length: DataAccessor, *, distance: BoundsDecorator | None = None,
                 queue_item: DataAccessor | None = None, pq: PriorityQueue | None = None,
                 iterator: type = OutAdjIt, tracer: Tracer | None = None):
        self.graph = graph
        self.length = length
        self.distance = (distance if distance is not None
                         else BoundsDecorator(node_array(graph, math.inf), 0, math.inf))
        self.queue_item = queue_item if queue_item is not None else node_array(graph, None)
        self.pq = pq if pq is not None else PriorityQueue()
        self.iterator = iterator
        self.tracer = tracer
        self.active: Any = None
        self.phase: DijkstraPhase | None = None

    def seed(self, source: Any, dist: Any = None) -> None:
        """Add a source node (or adjacency iterator) at distance ``dist`` (default ``value_null``)."""
        it = source if hasattr(source, "curr_adj") else self.iterator(self.graph, source)
        d = self.distance.value_null if dist is None else dist
        self.distance.set(it, d)
        h = self.queue_item.get(it)
        if h is None:
            self.queue_item.set(it, self.pq.insert(it, d))
        else:
            self.pq.decrease_key(h, d)

    def finished(self) -> bool:
        a = self.active
        return (a is None or not a.valid()) and self.pq.empty()

    def current(self) -> Any:
        """The adjacency iterator whose current edge the next step relaxes."""
        a = self.active
        if a is not None and a.valid():
            return a
        if self.pq.empty():
            return None
        return self.pq.find_minimum().item

    def next(self) -> DijkstraPhase:
        cur = self.active
        if cur is None or not cur.valid():
            pq = self.pq
            if pq.empty():
                raise self._finished_error()
            cur = pq.extract_minimum()[0]
            self.queue_item.set(cur, None)
            self.active = cur
            self.phase = DijkstraPhase.DEPTH
        else:
            self.phase = DijkstraPhase.BREADTH
        if cur.valid():
            self._relax(cur)
            cur.succ()
        tr = self.tracer
        if tr is not None:
            tr.emit(self.phase.value, tr.container(h.item for h in self.pq), "-",
                    self.phase.value, cur.copy())
        return self.phase

    def finish_algo(self) -> Dijkstra:
        """Run to the end; performs the same relaxations as repeated ``next()``."""
        if self.tracer is not None:
            return super().finish_algo()
        pq, qi, dist = self.pq, self.queue_item, self.distance
        length, dget, dset = self.length.get, dist.get, dist.set
        qget, qset = qi.get, qi.set
        cur = self.active
        while True:
            if cur is None or not cur.valid():
                if pq.empty():
                    break
                cur = pq.extract_minimum()[0]
                qset(cur, None)
                self.active = cur
                self.phase = DijkstraPhase.DEPTH
            # a scanned node's distance is final, so it is read once per node
            du = dget(cur)
            while cur.valid():
                w = length(cur)
                if w < 0:
                    raise InputError(f"negative edge length {w!r} on edge {cur.edge!r}")
                nxt = cur.curr_adj()
                c = du + w
                if c < dget(nxt):
                    h = qget(nxt)
                    if h is None:
                        qset(nxt, pq.insert(nxt, c))
                    else:
                        pq.decrease_key(h, c)
                    dset(nxt, c)
                cur.succ()
                self.phase = DijkstraPhase.BREADTH
        return self

    def _relax(self, cur: Any) -> None:
        w = self.length.get(cur)
        if w < 0:
            raise InputError(f"negative edge length {w!r} on edge {cur.edge!r}")
        dist = self.distance
        nxt = cur.curr_adj()
        c = dist.get(cur) + w
        if c < dist.get(nxt):
            qi = self.queue_item
            h = qi.get(nxt)
            if h is None:
                qi.set(nxt, self.pq.insert(nxt, c))
            else:
                self.pq.decrease_key(h, c)
            dist.set(nxt, c)


class PredecessorRecorder(AlgorithmObject):
    """Wraps an algorithm and records, from outside, which edge last improved each node.

    Before every step it looks at ``algorithm.current()``: the edge about to
    be processed and the node across it.  If ``watch`` for that node improved
    during the step (per ``improved(old, new)``), the edge is written to
    ``pred`` for the node.  Over :class:`Dijkstra` with ``watch`` the
    distance accessor this yields a shortest-path tree.
    """

    def __init__(self, algorithm: AlgorithmObject, watch: DataAccessor, pred: DataAccessor | None = None,
                 improved: Callable[[Any, Any], bool] = lambda old, new: new < old):
        self.algorithm = algorithm
        self.watch = watch
        self.pred = pred if pred is not None else node_array(algorithm.graph, None)
        self.improved = improved

    def finished(self) -> bool:
        return self.algorithm.finished()

    def current(self) -> Any:
        return self.algorithm.current()

    def next(self) -> Any:
        it = self.algorithm.current()
        if it is None or not it.valid():
            return self.algorithm.next()
        edge = it.edge
        target = it.curr_adj()
        before = self.watch.get(target)
        result = self.algorithm.next()
        if self.improved(before, self.watch.get(target)):
            self.pred.set(target, edge)
        return result
