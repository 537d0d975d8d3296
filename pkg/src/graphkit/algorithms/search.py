"""Graph search as loop kernels: breadth-first, simple depth-first and stateful depth-first."""

from __future__ import annotations

from enum import Enum
from typing import Any

from ..accessors import node_array
from ..iterators import OutAdjIt
from ..structures import Queue, Stack
from .base import AlgorithmObject, Tracer


def _as_iterator(graph: Any, start: Any, iterator: type) -> Any:
    return start if hasattr(start, "curr_adj") else iterator(graph, start)


class _ContainerSearch(AlgorithmObject):
    """BFS and simple DFS differ only in the container; one ``next()`` processes a whole node."""

    _word = ""

    def __init__(self, graph: Any, source: Any = None, *, mark: Any = None,
                 iterator: type = OutAdjIt, tracer: Tracer | None = None):
        self.graph = graph
        self.mark = mark if mark is not None else node_array(graph, False)
        self.iterator = iterator
        self.tracer = tracer
        self.visited: list = []  # marking order, kept only while tracing
        self._make_container()
        if source is not None:
            self.init(source)

    def _make_container(self) -> None:
        raise NotImplementedError

    def _put(self, it: Any) -> None:
        raise NotImplementedError

    def init(self, start: Any) -> None:
        """Seed the search with a node or an adjacency iterator and mark it seen."""
        it = _as_iterator(self.graph, start, self.iterator)
        self.mark.set(it, True)
        self._put(it)
        tr = self.tracer
        if tr is not None:
            self.visited.append(it.node)
            tr.emit(f"adjacency iterator {tr.it(it)} into {self._word}",
                    tr.container(self.container), tr.nodes(self.visited), "init", it)

    def finished(self) -> bool:
        return self.container.empty()

    def current(self) -> Any:
        """The adjacency iterator the next step will pop, or None."""
        return None if self.container.empty() else self.container.top()

    def next(self) -> None:
        c = self.container
        if c.empty():
            raise self._finished_error()
        if self.tracer is not None:
            self._traced_next()
            return
        ai = c.pop()
        get, put = self.mark.get, self.mark.set
        add = self._put
        while ai.valid():
            temp = ai.curr_adj()
            if not get(temp):
                put(temp, True)
                add(temp)
            ai.succ()

    def _traced_next(self) -> None:
        tr = self.tracer
        c = self.container
        word = self._word

        def emit(action, kind="", subject=None):
            tr.emit(action, tr.container(c), tr.nodes(self.visited), kind, subject)

        ai = c.pop()
        emit(f"pop {tr.it(ai)}", "pop", ai.copy())
        while True:
            if not ai.valid():
                emit(f"{tr.it(ai)} valid? => no", "invalid", ai.copy())
                return
            emit(f"{tr.it(ai)} valid? => yes", "valid", ai.copy())
            temp = ai.curr_adj()
            emit(f"current adjacency iterator of {tr.it(ai)} is {tr.it(temp)}", "curr_adj", temp.copy())
            if not self.mark.get(temp):
                self.mark.set(temp, True)
                self.visited.append(temp.node)
                emit(f"{tr.it(temp)} seen? => no", "unseen", temp.copy())
                self._put(temp)
                emit(f"append {tr.it(temp)} to {word}", "append", temp.copy())
            else:
                emit(f"{tr.it(temp)} seen? => yes", "seen", temp.copy())
            before = tr.it(ai)
            ai.succ()
            emit(f"advance({before}) = {tr.it(ai)}", "advance", ai.copy())


class BreadthFirstSearch(_ContainerSearch):
    """Breadth-first search.  Each ``next()`` pops one adjacency iterator from a queue
    and appends the iterators of all its unseen neighbours."""

    _word = "queue"

    def _make_container(self) -> None:
        self.container = Queue()
        self._put = self.container.append


class SimpleDepthFirstSearch(_ContainerSearch):
    """Depth-first search driven by a stack of adjacency iterators.

    Same step as :class:`BreadthFirstSearch` with the queue replaced by a
    stack.  The sequence of nodes popped is a depth-first order, but finish
    times are not observable; use :class:`DepthFirstSearch` for those.
    """

    _word = "stack"

    def _make_container(self) -> None:
        self.container = Stack()
        self._put = self.container.push


class DfsStep(Enum):
    SHRINK = "shrink"
    LEAF = "leaf"
    GROW_DEPTH = "grow_depth"
    GROW_BREADTH = "grow_breadth"


class DepthFirstSearch(AlgorithmObject):
    """Depth-first search that examines one edge per step and reports what happened.

    A node's iterator stays on the stack until its adjacency list is used
    up, so the stack always holds the current tree path.  ``next()``
    returns a :class:`DfsStep`:

    * ``GROW_DEPTH``: an unseen neighbour was pushed,
    * ``GROW_BREADTH``: the top iterator moved to its next edge,
    * ``SHRINK``: the top node's last edge was examined and it was popped,
    * ``LEAF``: the top node has no out-edges and was popped.
    """

    def __init__(self, graph: Any, source: Any = None, *, mark: Any = None,
                 iterator: type = OutAdjIt, tracer: Tracer | None = None):
        self.graph = graph
        self.mark = mark if mark is not None else node_array(graph, False)
        self.iterator = iterator
        self.tracer = tracer
        self.stack = Stack()
        if source is not None:
            self.init(source)

    def init(self, start: Any) -> None:
        it = _as_iterator(self.graph, start, self.iterator)
        self.stack.push(it)
        self.mark.set(it, True)

    def finished(self) -> bool:
        return self.stack.empty()

    def current(self) -> Any:
        return None if self.stack.empty() else self.stack.top()

    def next(self) -> DfsStep:
        st = self.stack
        if st.empty():
            raise self._finished_error()
        ai = st.top()
        if ai.valid():
            temp = ai.curr_adj()
            if not self.mark.get(temp):
                st.push(temp)
                self.mark.set(temp, True)
                state = DfsStep.GROW_DEPTH
            else:
                ai.succ()
                if ai.valid():
                    state = DfsStep.GROW_BREADTH
                else:
                    st.pop()
                    state = DfsStep.SHRINK
        else:
            st.pop()
            state = DfsStep.LEAF
        tr = self.tracer
        if tr is not None:
            tr.emit(state.value, tr.container(st), "-", state.value, ai.copy())
        return state
