"""Common protocol of the stepwise algorithm objects, and the trace hook."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from typing import Any

from ..errors import UsageError


class AlgorithmObject:
    """An algorithm whose core loop body is one externally driven ``next()``.

    ``finished()`` tells whether another step is legal, ``current()`` exposes
    the element the next step will work on.  All state is public so the
    caller can inspect it between steps.
    """

    tracer: Tracer | None = None

    def next(self) -> Any:
        raise NotImplementedError

    def finished(self) -> bool:
        raise NotImplementedError

    def current(self) -> Any:
        raise NotImplementedError

    def finish_algo(self):
        """Step until finished and return ``self``."""
        while not self.finished():
            self.next()
        return self

    def steps(self):
        """Generator form: performs one step per iteration and yields its result."""
        while not self.finished():
            yield self.next()

    def _finished_error(self) -> UsageError:
        return UsageError(f"next() on a finished {type(self).__name__}")


def _plain(h: Any) -> str:
    return str(h)


class Tracer:
    """Collects a step trace as tab-separated rows.

    Each row is ``step<TAB>action<TAB>container<TAB>visited``; the container
    column lists iterators as ``(node, edge)`` with ``-`` for a missing edge
    and ``-`` for an empty container.  Pass ``write`` to stream each row as
    it is produced.
    """

    def __init__(self, node_label: Callable[[Any], str] = _plain,
                 edge_label: Callable[[Any], str] = _plain,
                 write: Callable[[str], Any] | None = None):
        self.node_label = node_label
        self.edge_label = edge_label
        self.write = write
        self.rows: list[str] = []
        self.events: list[tuple[str, Any]] = []

    def it(self, it: Any) -> str:
        node = "-" if it.node is None else self.node_label(it.node)
        edge = "-" if it.edge is None else self.edge_label(it.edge)
        return f"({node}, {edge})"

    def container(self, items: Iterable[Any]) -> str:
        text = ", ".join(self.it(x) for x in items)
        return text or "-"

    def nodes(self, nodes: Iterable[Any]) -> str:
        text = ",".join(self.node_label(v) for v in nodes)
        return text or "-"

    def emit(self, action: str, container: str = "-", visited: str = "-",
             kind: str = "", subject: Any = None) -> None:
        row = f"{len(self.rows)}\t{action}\t{container}\t{visited}"
        self.rows.append(row)
        self.events.append((kind, subject))
        if self.write is not None:
            self.write(row)

    def text(self) -> str:
        return "".join(r + "\n" for r in self.rows)
