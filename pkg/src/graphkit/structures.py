"""Auxiliary containers used by the algorithm objects."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from typing import Any

from .errors import UsageError


class Stack:
    """LIFO container.  Iteration runs bottom to top."""

    __slots__ = ("_items",)

    def __init__(self) -> None:
        self._items: list = []

    def push(self, x: Any) -> None:
        self._items.append(x)

    def pop(self) -> Any:
        if not self._items:
            raise UsageError("pop from an empty stack")
        return self._items.pop()

    def top(self) -> Any:
        if not self._items:
            raise UsageError("top of an empty stack")
        return self._items[-1]

    def empty(self) -> bool:
        return not self._items

    def clear(self) -> None:
        self._items.clear()

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator:
        return iter(self._items)


class Queue:
    """FIFO container.  Iteration runs front to back."""

    __slots__ = ("_items",)

    def __init__(self) -> None:
        self._items: deque = deque()

    def append(self, x: Any) -> None:
        self._items.append(x)

    def pop(self) -> Any:
        if not self._items:
            raise UsageError("pop from an empty queue")
        return self._items.popleft()

    def top(self) -> Any:
        if not self._items:
            raise UsageError("top of an empty queue")
        return self._items[0]

    def empty(self) -> bool:
        return not self._items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator:
        return iter(self._items)


class PQItem:
    """Handle to an entry of a :class:`PriorityQueue`."""

    __slots__ = ("prio", "seq", "item", "pos")

    def __init__(self, prio, seq, item, pos):
        self.prio = prio
        self.seq = seq
        self.item = item
        self.pos = pos

    def __repr__(self) -> str:
        return f"PQItem({self.item!r}, {self.prio!r})"


class PriorityQueue:
    """Binary min-heap with handle-based ``decrease_key``.

    ``insert`` returns a :class:`PQItem` handle; equal priorities leave in
    insertion order.  An extracted handle has ``pos == -1``.
    """

    __slots__ = ("_heap", "_seq")

    def __init__(self) -> None:
        self._heap: list[PQItem] = []
        self._seq = 0

    def empty(self) -> bool:
        return not self._heap

    def __len__(self) -> int:
        return len(self._heap)

    def __iter__(self) -> Iterator[PQItem]:
        return iter(sorted(self._heap, key=lambda h: (h.prio, h.seq)))

    def insert(self, item: Any, prio: Any) -> PQItem:
        h = PQItem(prio, self._seq, item, len(self._heap))
        self._seq += 1
        self._heap.append(h)
        self._sift_up(h.pos)
        return h

    def find_minimum(self) -> PQItem:
        if not self._heap:
            raise UsageError("find_minimum on an empty priority queue")
        return self._heap[0]

    def extract_minimum(self) -> tuple[Any, Any]:
        """Remove a minimum entry and return ``(item, priority)``."""
        heap = self._heap
        if not heap:
            raise UsageError("extract_minimum on an empty priority queue")
        top = heap[0]
        last = heap.pop()
        if heap:
            heap[0] = last
            last.pos = 0
            self._sift_down(0)
        top.pos = -1
        return top.item, top.prio

    def decrease_key(self, h: PQItem, prio: Any) -> None:
        if h.pos < 0 or h.pos >= len(self._heap) or self._heap[h.pos] is not h:
            raise UsageError("decrease_key on a handle that is not in this queue")
        if prio > h.prio:
            raise UsageError("decrease_key must not increase the priority")
        h.prio = prio
        self._sift_up(h.pos)

    def contains(self, h: PQItem) -> bool:
        return 0 <= h.pos < len(self._heap) and self._heap[h.pos] is h

    def _sift_up(self, i: int) -> None:
        heap = self._heap
        h = heap[i]
        key = (h.prio, h.seq)
        while i > 0:
            p = (i - 1) >> 1
            ph = heap[p]
            if (ph.prio, ph.seq) <= key:
                break
            heap[i] = ph
            ph.pos = i
            i = p
        heap[i] = h
        h.pos = i

    def _sift_down(self, i: int) -> None:
        heap = self._heap
        n = len(heap)
        h = heap[i]
        key = (h.prio, h.seq)
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            ch = heap[c]
            ckey = (ch.prio, ch.seq)
            if c + 1 < n:
                rh = heap[c + 1]
                rkey = (rh.prio, rh.seq)
                if rkey < ckey:
                    c, ch, ckey = c + 1, rh, rkey
            if key <= ckey:
                break
            heap[i] = ch
            ch.pos = i
            i = c
        heap[i] = h
        h.pos = i
