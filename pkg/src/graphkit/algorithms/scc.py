"""Strongly connected components in two depth-first phases."""

from __future__ import annotations

from enum import Enum
from typing import Any

from ..accessors import node_array
from ..iterators import InAdjIt, NodeIt, OutAdjIt
from ..structures import Stack
from .base import AlgorithmObject, Tracer
from .search import DepthFirstSearch, DfsStep, SimpleDepthFirstSearch


class SccPhase(Enum):
    FIRST = "first"
    SECOND = "second"
    DONE = "done"


class StronglyConnectedComponents(AlgorithmObject):
    """Two-pass component search, driven one step at a time.

    Phase one runs a stateful depth-first search over out-edges from every
    not yet seen node in node order and pushes each node on ``leaf_stack``
    when it is finished.  Then all marks are cleared and phase two runs
    simple depth-first searches over in-edges, seeding each from the
    unseen node with the latest finish time.  Every phase-two tree is one
    component; ``component`` maps nodes to component numbers from 0.

    ``next()`` returns the phase the step belonged to.
    """

    def __init__(self, graph: Any, *, mark: Any = None, component: Any = None,
                 out_iterator: type = OutAdjIt, in_iterator: type = InAdjIt,
                 tracer: Tracer | None = None):
        self.graph = graph
        self.mark = mark if mark is not None else node_array(graph, False)
        self.component = component if component is not None else node_array(graph, None)
        self.out_iterator = out_iterator
        self.in_iterator = in_iterator
        self.tracer = tracer
        self.leaf_stack = Stack()
        self.node_it = NodeIt(graph)
        self.dfs1 = DepthFirstSearch(graph, mark=self.mark, iterator=out_iterator)
        self.dfs2 = SimpleDepthFirstSearch(graph, mark=self.mark, iterator=in_iterator)
        self.count = -1
        self.phase = SccPhase.FIRST
        if self.node_it.valid():
            self.dfs1.init(out_iterator(graph, self.node_it.node))
        else:
            self.phase = SccPhase.DONE

    def finished(self) -> bool:
        return self.phase is SccPhase.DONE

    def current(self) -> Any:
        if self.phase is SccPhase.FIRST:
            return self.dfs1.current()
        if self.phase is SccPhase.SECOND:
            return self.dfs2.current()
        return None

    def next(self) -> SccPhase:
        if self.phase is SccPhase.FIRST:
            tag = self._next_first()
        elif self.phase is SccPhase.SECOND:
            tag = self._next_second()
        else:
            raise self._finished_error()
        tr = self.tracer
        if tr is not None:
            cur = self.current()
            tr.emit(tag.value, tr.nodes(self.leaf_stack), "-" if cur is None else tr.it(cur), tag.value)
        return tag

    def _next_first(self) -> SccPhase:
        dfs1 = self.dfs1
        if dfs1.finished():
            it = self.node_it
            get = self.mark.get
            while it.valid() and get(it):
                it.succ()
            if it.valid():
                dfs1.init(self.out_iterator(self.graph, it.node))
            else:
                self._start_second()
            return SccPhase.FIRST
        top = dfs1.current()
        state = dfs1.next()
        if state is DfsStep.SHRINK or state is DfsStep.LEAF:
            self.leaf_stack.push(top.node)
        return SccPhase.FIRST

    def _start_second(self) -> None:
        it = NodeIt(self.graph)
        put = self.mark.set
        while it.valid():
            put(it, False)
            it.succ()
        self.phase = SccPhase.SECOND
        self._seed_second()

    def _seed_second(self) -> bool:
        """Start the next phase-two tree; False when no unseen node is left."""
        get = self.mark.get
        while not self.leaf_stack.empty():
            seed = self.in_iterator(self.graph, self.leaf_stack.pop())
            if not get(seed):
                self.count += 1
                self.dfs2.init(seed)
                return True
        self.phase = SccPhase.DONE
        return False

    def _next_second(self) -> SccPhase:
        dfs2 = self.dfs2
        if dfs2.finished():
            self._seed_second()
            return SccPhase.SECOND
        self.component.set(dfs2.current(), self.count)
        dfs2.next()
        if dfs2.finished() and self.leaf_stack.empty():
            self.phase = SccPhase.DONE
        return SccPhase.SECOND

    @property
    def number_of_components(self) -> int:
        return self.count + 1
