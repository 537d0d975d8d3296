"""Iterators that survive deletions.

A :class:`SafeGraph` wraps a mutable backend and keeps a registry of the
safe iterators currently standing on each node and edge.  Deleting an item
through the safe graph first moves every other iterator standing on it (or
on an edge that disappears with it) to a new position, according to the
iterator's escape mode, and only then mutates the backend.  No safe
iterator ever holds a deleted handle.

Iterators are registered while they hold an item.  Call :meth:`close` on
an iterator that is no longer needed to drop its registration.
"""

from __future__ import annotations

from enum import Enum
from typing import Any

from .errors import CapabilityError, UsageError
from .iterators import _FIRST, _UNSET, EdgeIt, InAdjIt, NodeIt, OutAdjIt
from .kernel import AdjListGraph, GraphKernel


class EscapeMode(Enum):
    """Where an iterator goes when its item is deleted."""

    FORWARD = "forward"  # to the next surviving item in the same order
    NONE = "none"        # becomes invalid


class SafeGraph:
    """Registry-bearing wrapper around a mutable graph."""

    def __init__(self, backend: GraphKernel | None = None):
        if backend is None:
            backend = AdjListGraph()
        if not backend.mutable:
            raise CapabilityError("safe iterators need a mutable backend")
        self.backend = backend
        self.nmap: dict[Any, dict[int, Any]] = {}
        self.emap: dict[Any, dict[int, Any]] = {}

    # -- registry -------------------------------------------------------------
    @staticmethod
    def _add(table: dict, key: Any, it: Any) -> None:
        bucket = table.get(key)
        if bucket is None:
            table[key] = bucket = {}
        bucket[id(it)] = it

    @staticmethod
    def _remove(table: dict, key: Any, it: Any) -> None:
        bucket = table.get(key)
        if bucket is not None:
            bucket.pop(id(it), None)
            if not bucket:
                del table[key]

    def registered_count(self) -> int:
        return sum(len(b) for b in self.nmap.values()) + sum(len(b) for b in self.emap.values())

    def registered_iterators(self) -> int:
        """Number of distinct iterators in the registry (adjacency iterators appear twice)."""
        ids = {k for b in self.nmap.values() for k in b}
        ids.update(k for b in self.emap.values() for k in b)
        return len(ids)

    def is_registered(self, it: Any) -> bool:
        key = id(it)
        return any(key in b for b in self.nmap.values()) or any(key in b for b in self.emap.values())

    def registrations(self) -> set[tuple[str, Any, int]]:
        """Every registry entry as ``(kind, item, id(iterator))``."""
        out = {("node", v, k) for v, b in self.nmap.items() for k in b}
        out |= {("edge", e, k) for e, b in self.emap.items() for k in b}
        return out

    # -- navigation helpers -----------------------------------------------------
    def refresh(self, e: Any, v: Any) -> Any:
        """First edge after *e* in edge order with neither endpoint equal to *v*, else None."""
        g = self.backend
        e = g.advance_edge(e)
        if v is None:
            return e
        while e is not None and (g.source(e) == v or g.target(e) == v):
            e = g.advance_edge(e)
        return e

    # -- mutation -------------------------------------------------------------
    def new_node(self) -> Any:
        """Add a node; it goes to the end of the node order."""
        return self.backend.new_node()

    def new_edge(self, u: Any, v: Any) -> Any:
        return self.backend.new_edge(u, v)

    def _check_initiator(self, initiator: Any) -> None:
        if initiator is not None and (getattr(initiator, "sg", None) is not self
                                      or not self.is_registered(initiator)):
            raise UsageError("deletion initiated through an iterator not registered with this graph")

    def delete_node(self, v: Any, initiator: Any = None) -> None:
        """Delete *v* and its incident edges, relocating every other affected iterator first."""
        g = self.backend
        if not g.is_node(v):
            raise UsageError(f"{v!r} is not a live node of this graph")
        self._check_initiator(initiator)
        affected: dict[int, Any] = {}
        affected.update(self.nmap.get(v, {}))
        incident = list(g.out_edges(v)) + [e for e in g.in_edges(v) if g.source(e) != v]
        for e in incident:
            affected.update(self.emap.get(e, {}))
        if initiator is not None:
            affected.pop(id(initiator), None)
            initiator._deregister()
        for it in affected.values():
            it._deregister()
            it._refresh(v)
            it._register()
        if self.nmap.get(v) or any(self.emap.get(e) for e in incident):
            raise AssertionError("registry still references a deleted item")
        g.del_node(v)
        if initiator is not None:
            initiator._after_own_deletion()
            initiator._register()

    def delete_edge(self, e: Any, initiator: Any = None) -> None:
        """Delete *e*, relocating every other iterator standing on it first."""
        g = self.backend
        if not g.is_edge(e):
            raise UsageError(f"{e!r} is not a live edge of this graph")
        self._check_initiator(initiator)
        affected = dict(self.emap.get(e, {}))
        if initiator is not None:
            affected.pop(id(initiator), None)
            initiator._deregister()
        for it in affected.values():
            it._deregister()
            it._refresh(None)
            it._register()
        g.del_edge(e)
        if initiator is not None:
            initiator._after_own_deletion()
            initiator._register()


class _SafeMixin:
    """Registration bookkeeping shared by the safe iterators."""

    __slots__ = ()

    def _keys(self) -> tuple[Any, Any]:
        raise NotImplementedError

    def _register(self) -> None:
        nk, ek = self._keys()
        self._reg = (nk, ek)
        if nk is not None:
            SafeGraph._add(self.sg.nmap, nk, self)
        if ek is not None:
            SafeGraph._add(self.sg.emap, ek, self)

    def _deregister(self) -> None:
        nk, ek = self._reg
        if nk is not None:
            SafeGraph._remove(self.sg.nmap, nk, self)
        if ek is not None:
            SafeGraph._remove(self.sg.emap, ek, self)
        self._reg = (None, None)

    def close(self) -> None:
        """Drop the registration and invalidate the iterator."""
        self._deregister()
        self._invalidate()

    def __enter__(self):
        return self

    def __exit__(self, *exc: Any) -> None:
        self.close()

    def _after_own_deletion(self) -> None:
        self._invalidate()


class SafeNodeIt(_SafeMixin, NodeIt):
    __slots__ = ("sg", "escape", "_reg")

    def __init__(self, sg: SafeGraph, node: Any = _FIRST, escape: EscapeMode = EscapeMode.FORWARD):
        self.sg = sg
        self.escape = escape
        self._reg = (None, None)
        NodeIt.__init__(self, sg.backend, node)
        self._register()

    def _keys(self):
        return self.node, None

    def _invalidate(self) -> None:
        self.node = None

    def _refresh(self, v: Any) -> None:
        if self.escape is EscapeMode.FORWARD:
            self.node = self.graph.advance_node(v)
        else:
            self.node = None

    def succ(self) -> SafeNodeIt:
        if self.node is None:
            raise UsageError("succ on an invalid node iterator")
        self._deregister()
        self.node = self.graph.advance_node(self.node)
        self._register()
        return self

    def reset(self) -> SafeNodeIt:
        self._deregister()
        NodeIt.reset(self)
        self._register()
        return self

    def update(self, node: Any) -> SafeNodeIt:
        self._deregister()
        NodeIt.update(self, node)
        self._register()
        return self

    def make_invalid(self) -> SafeNodeIt:
        self.close()
        return self

    def insert(self) -> SafeNodeIt:
        self._deregister()
        self.node = self.sg.new_node()
        self._register()
        return self

    def delete(self) -> None:
        if self.node is None:
            raise UsageError("delete on an invalid node iterator")
        self.sg.delete_node(self.node, initiator=self)

    def copy(self) -> SafeNodeIt:
        return SafeNodeIt(self.sg, self.node, self.escape)

    def __repr__(self) -> str:
        return f"SafeNodeIt(node={self.node!r}, escape={self.escape.value})"


class SafeEdgeIt(_SafeMixin, EdgeIt):
    __slots__ = ("sg", "escape", "_reg")

    def __init__(self, sg: SafeGraph, edge: Any = _FIRST, escape: EscapeMode = EscapeMode.FORWARD):
        self.sg = sg
        self.escape = escape
        self._reg = (None, None)
        EdgeIt.__init__(self, sg.backend, edge)
        self._register()

    def _keys(self):
        return None, self.edge

    def _invalidate(self) -> None:
        self.edge = None

    def _refresh(self, v: Any) -> None:
        if self.escape is EscapeMode.FORWARD:
            self.edge = self.sg.refresh(self.edge, v)
        else:
            self.edge = None

    def succ(self) -> SafeEdgeIt:
        if self.edge is None:
            raise UsageError("succ on an invalid edge iterator")
        self._deregister()
        self.edge = self.graph.advance_edge(self.edge)
        self._register()
        return self

    def reset(self) -> SafeEdgeIt:
        self._deregister()
        EdgeIt.reset(self)
        self._register()
        return self

    def update(self, edge: Any) -> SafeEdgeIt:
        self._deregister()
        EdgeIt.update(self, edge)
        self._register()
        return self

    def make_invalid(self) -> SafeEdgeIt:
        self.close()
        return self

    def delete(self) -> None:
        if self.edge is None:
            raise UsageError("delete on an invalid edge iterator")
        self.sg.delete_edge(self.edge, initiator=self)

    def copy(self) -> SafeEdgeIt:
        return SafeEdgeIt(self.sg, self.edge, self.escape)

    def __repr__(self) -> str:
        return f"SafeEdgeIt(edge={self.edge!r}, escape={self.escape.value})"


class _SafeAdjMixin(_SafeMixin):
    """Adjacency iterators register under both their fixed node and their edge,
    so that they hear about the deletion of the fixed node even without an edge."""

    __slots__ = ()

    def __init__(self, sg: SafeGraph, node: Any = _FIRST, edge: Any = _UNSET,
                 escape: EscapeMode = EscapeMode.FORWARD):
        self.sg = sg
        self.escape = escape
        self._reg = (None, None)
        self._plain_init(sg.backend, node, edge)
        self._register()

    def _keys(self):
        return self.node, self.edge

    def _invalidate(self) -> None:
        self.node = None
        self.edge = None

    def _after_own_deletion(self) -> None:
        # deleting the current edge keeps the fixed node
        self.edge = None

    def _refresh(self, v: Any) -> None:
        if self.escape is EscapeMode.NONE:
            self.node = self.edge = None
            return
        if v is None:
            # the current edge itself is deleted
            self.edge = self._advance(self.edge)
        elif v == self.node:
            if self.edge is not None:
                e = self.sg.refresh(self.edge, v)
                self.node = None if e is None else self._fixed_end(e)
                self.edge = e
            else:
                self.node = self.graph.advance_node(v)
                e = None if self.node is None else self._first(self.node)
                while e is not None and self._far_end(e) == v:
                    e = self._advance(e)
                self.edge = e
        else:
            # the node across the current edge is deleted
            e = self._advance(self.edge)
            while e is not None and self._far_end(e) == v:
                e = self._advance(e)
            self.edge = e

    def succ(self):
        if self.edge is None:
            raise UsageError("succ on an invalid adjacency iterator")
        self._deregister()
        self.edge = self._advance(self.edge)
        self._register()
        return self

    def curr_adj(self):
        if self.edge is None:
            raise UsageError("curr_adj on an invalid adjacency iterator")
        return type(self)(self.sg, self._far_end(self.edge), escape=self.escape)

    def reset(self):
        self._deregister()
        super().reset()
        self._register()
        return self

    def update(self, node: Any, edge: Any = _UNSET):
        self._deregister()
        super().update(node, edge)
        self._register()
        return self

    def update_edge(self, edge: Any):
        self._deregister()
        super().update_edge(edge)
        self._register()
        return self

    def make_invalid(self):
        self.close()
        return self

    def delete(self) -> None:
        if self.edge is None:
            raise UsageError("delete on an invalid adjacency iterator")
        self.sg.delete_edge(self.edge, initiator=self)

    def copy(self):
        return type(self)(self.sg, self.node, self.edge, escape=self.escape)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(node={self.node!r}, edge={self.edge!r}, escape={self.escape.value})"


class SafeOutAdjIt(_SafeAdjMixin, OutAdjIt):
    __slots__ = ("sg", "escape", "_reg")

    def _plain_init(self, graph, node, edge):
        OutAdjIt.__init__(self, graph, node, edge)

    def insert(self, other: Any) -> SafeOutAdjIt:
        if self.node is None or other.node is None:
            raise UsageError("insert needs two iterators that hold nodes")
        self._deregister()
        self.edge = self.sg.new_edge(self.node, other.node)
        self._register()
        return self


class SafeInAdjIt(_SafeAdjMixin, InAdjIt):
    __slots__ = ("sg", "escape", "_reg")

    def _plain_init(self, graph, node, edge):
        InAdjIt.__init__(self, graph, node, edge)

    def insert(self, other: Any) -> SafeInAdjIt:
        if self.node is None or other.node is None:
            raise UsageError("insert needs two iterators that hold nodes")
        self._deregister()
        self.edge = self.sg.new_edge(other.node, self.node)
        self._register()
        return self
