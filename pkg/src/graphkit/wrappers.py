"""Iterator wrappers: filtering, observation and a single-attribute view."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from typing import Any

from .errors import UsageError


class FilterIterator:
    """Skips items for which ``predicate(inner)`` is false when stepping.

    Construction keeps the wrapped iterator where it is, even if its current
    item fails the predicate.  Pass ``skip_head=True`` to advance to the
    first accepted item instead.  Iterators derived through ``curr_adj``
    inherit both the predicate and ``skip_head``.
    """

    __slots__ = ("inner", "predicate", "skip_head")

    def __init__(self, inner: Any, predicate: Callable[[Any], bool], skip_head: bool = False):
        self.inner = inner
        self.predicate = predicate
        self.skip_head = skip_head
        if skip_head and inner.valid() and not predicate(inner):
            self._skip()

    @property
    def graph(self):
        return self.inner.graph

    @property
    def node(self):
        return self.inner.node

    @property
    def edge(self):
        return self.inner.edge

    def valid(self) -> bool:
        return self.inner.valid()

    def has_node(self) -> bool:
        return self.inner.has_node()

    def get_node(self):
        return self.inner.node

    def get_edge(self):
        return self.inner.edge

    def _skip(self) -> None:
        inner, pred = self.inner, self.predicate
        while True:
            inner.succ()
            if not inner.valid() or pred(inner):
                return

    def succ(self) -> FilterIterator:
        if not self.inner.valid():
            raise UsageError("succ on an invalid filter iterator")
        self._skip()
        return self

    def curr_adj(self) -> FilterIterator:
        return FilterIterator(self.inner.curr_adj(), self.predicate, self.skip_head)

    def copy(self) -> FilterIterator:
        it = object.__new__(FilterIterator)
        it.inner = self.inner.copy()
        it.predicate = self.predicate
        it.skip_head = self.skip_head
        return it

    def __repr__(self) -> str:
        return f"FilterIterator({self.inner!r})"


class Observer:
    """Receives lifecycle events from an :class:`ObserverIterator`."""

    def notify_creation(self, it: Any) -> None:
        pass

    def notify_succ(self, it: Any) -> None:
        pass


class StepCounter(Observer):
    """Counts successful steps since creation.

    A full traversal of n items counts n - 1: the final step leaves the
    sequence and is not reported.
    """

    def __init__(self) -> None:
        self.count = 0

    def notify_creation(self, it: Any) -> None:
        self.count = 0

    def notify_succ(self, it: Any) -> None:
        self.count += 1


class ObserverIterator:
    """Reports creation and every successful step of the wrapped iterator to an observer.

    Iterators obtained through ``curr_adj`` or ``copy`` share the observer
    but are not announced as new creations, so an observer can count the
    work of a whole traversal.
    """

    __slots__ = ("inner", "observer")

    def __init__(self, inner: Any, observer: Observer, _announce: bool = True):
        self.inner = inner
        self.observer = observer
        if _announce:
            observer.notify_creation(inner)

    @property
    def graph(self):
        return self.inner.graph

    @property
    def node(self):
        return self.inner.node

    @property
    def edge(self):
        return self.inner.edge

    def valid(self) -> bool:
        return self.inner.valid()

    def has_node(self) -> bool:
        return self.inner.has_node()

    def get_node(self):
        return self.inner.node

    def get_edge(self):
        return self.inner.edge

    def succ(self) -> ObserverIterator:
        inner = self.inner
        inner.succ()
        # stepping off the end is not a step the observer hears about
        if inner.valid():
            self.observer.notify_succ(inner)
        return self

    def curr_adj(self) -> ObserverIterator:
        return ObserverIterator(self.inner.curr_adj(), self.observer, _announce=False)

    def copy(self) -> ObserverIterator:
        return ObserverIterator(self.inner.copy(), self.observer, _announce=False)

    def __repr__(self) -> str:
        return f"ObserverIterator({self.inner!r})"


class SingleAttributeAdapter:
    """Presents an iterator as a sequence of one attribute's values.

    ``value()`` reads the attribute at the current position; iterating the
    adapter with ``for`` yields the remaining values and consumes the
    wrapped iterator.
    """

    __slots__ = ("inner", "da")

    def __init__(self, inner: Any, da: Any):
        self.inner = inner
        self.da = da

    def value(self) -> Any:
        return self.da.get(self.inner)

    def set_value(self, value: Any) -> None:
        self.da.set(self.inner, value)

    def valid(self) -> bool:
        return self.inner.valid()

    def succ(self) -> SingleAttributeAdapter:
        self.inner.succ()
        return self

    def __iter__(self) -> Iterator[Any]:
        inner, get = self.inner, self.da.get
        while inner.valid():
            yield get(inner)
            inner.succ()
