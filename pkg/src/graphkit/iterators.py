"""Node, edge and adjacency iterators over any graph kernel.

An iterator is a small mutable value: a graph reference plus the current
item (``node`` and/or ``edge``; ``None`` means "no item").  Stepping is
``succ()``, which advances in place and returns the iterator.

Constructing ``OutAdjIt(g, v)`` picks a backend-tuned subclass when one is
registered for ``type(g)``.  The tuned classes read the backend arrays
directly instead of going through the checked kernel functions; behaviour is
identical.
"""

from __future__ import annotations

from typing import Any

from .errors import UsageError
from .kernel import AdjListGraph, CompactGraph, GraphKernel, ImplicitCompleteGraph

_FIRST = object()
_UNSET = object()

_SPECIALIZED: dict[tuple[type, type], type] = {}


def register_specialization(kernel_cls: type, generic_cls: type, impl: type) -> None:
    """Use *impl* whenever *generic_cls* is instantiated over a *kernel_cls* graph."""
    _SPECIALIZED[(kernel_cls, generic_cls)] = impl


class _Base:
    __slots__ = ("graph",)
    _kind = "?"

    def __new__(cls, graph: GraphKernel, *args: Any, **kwargs: Any):
        impl = _SPECIALIZED.get((type(graph), cls))
        return object.__new__(impl if impl is not None else cls)

    __hash__ = None  # mutable value objects

    def get_graph(self) -> GraphKernel:
        return self.graph

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def copy(self):
        it = object.__new__(type(self))
        for cls in type(self).__mro__:
            for name in getattr(cls, "__slots__", ()):
                if hasattr(self, name):
                    setattr(it, name, getattr(self, name))
        return it

    __copy__ = copy


class NodeIt(_Base):
    """Linear iterator over the node order of a graph."""

    __slots__ = ("node",)
    _kind = "node"

    def __init__(self, graph: GraphKernel, node: Any = _FIRST):
        self.graph = graph
        if node is _FIRST:
            node = graph.first_node()
        elif node is not None and not graph.is_node(node):
            raise UsageError(f"{node!r} is not a node of this graph")
        self.node = node

    def valid(self) -> bool:
        return self.node is not None

    def eol(self) -> bool:
        return self.node is None

    has_node = valid

    def get_node(self):
        return self.node

    def succ(self) -> NodeIt:
        if self.node is None:
            raise UsageError("succ on an invalid node iterator")
        self.node = self.graph.advance_node(self.node)
        return self

    def retreat(self) -> NodeIt:
        if self.node is None:
            raise UsageError("retreat on an invalid node iterator")
        self.node = self.graph.retreat_node(self.node)
        return self

    def reset(self) -> NodeIt:
        self.node = self.graph.first_node()
        return self

    def make_invalid(self) -> NodeIt:
        self.node = None
        return self

    def update(self, node: Any) -> NodeIt:
        if node is not None and not self.graph.is_node(node):
            raise UsageError(f"{node!r} is not a node of this graph")
        self.node = node
        return self

    def insert(self) -> NodeIt:
        """Create a new node in the graph and move to it."""
        self.node = self.graph.new_node()
        return self

    def delete(self) -> None:
        """Delete the current node; the iterator becomes invalid."""
        if self.node is None:
            raise UsageError("delete on an invalid node iterator")
        self.graph.del_node(self.node)
        self.node = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Base) or other._kind != self._kind:
            return NotImplemented
        return self.graph is other.graph and self.node == other.node

    def __repr__(self) -> str:
        return f"{type(self).__name__}(node={self.node!r})"


class EdgeIt(_Base):
    """Linear iterator over the edge order of a graph."""

    __slots__ = ("edge",)
    _kind = "edge"

    def __init__(self, graph: GraphKernel, edge: Any = _FIRST):
        self.graph = graph
        if edge is _FIRST:
            edge = graph.first_edge()
        elif edge is not None and not graph.is_edge(edge):
            raise UsageError(f"{edge!r} is not an edge of this graph")
        self.edge = edge

    def valid(self) -> bool:
        return self.edge is not None

    def eol(self) -> bool:
        return self.edge is None

    def get_edge(self):
        return self.edge

    def source(self):
        return self.graph.source(self.edge)

    def target(self):
        return self.graph.target(self.edge)

    def succ(self) -> EdgeIt:
        if self.edge is None:
            raise UsageError("succ on an invalid edge iterator")
        self.edge = self.graph.advance_edge(self.edge)
        return self

    def reset(self) -> EdgeIt:
        self.edge = self.graph.first_edge()
        return self

    def make_invalid(self) -> EdgeIt:
        self.edge = None
        return self

    def update(self, edge: Any) -> EdgeIt:
        if edge is not None and not self.graph.is_edge(edge):
            raise UsageError(f"{edge!r} is not an edge of this graph")
        self.edge = edge
        return self

    def delete(self) -> None:
        if self.edge is None:
            raise UsageError("delete on an invalid edge iterator")
        self.graph.del_edge(self.edge)
        self.edge = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Base) or other._kind != self._kind:
            return NotImplemented
        return self.graph is other.graph and self.edge == other.edge

    def __repr__(self) -> str:
        return f"{type(self).__name__}(edge={self.edge!r})"


class _AdjIt(_Base):
    """Shared machinery of the two adjacency iterators.

    The iterator holds a fixed node and a current edge incident to it.  It
    may hold a node but no edge (``has_node()`` true, ``valid()`` false).
    """

    __slots__ = ("node", "edge")

    # direction hooks, bound per subclass
    def _first(self, v):
        raise NotImplementedError

    def _advance(self, e):
        raise NotImplementedError

    def _fixed_end(self, e):
        raise NotImplementedError

    def _far_end(self, e):
        raise NotImplementedError

    def __init__(self, graph: GraphKernel, node: Any = _FIRST, edge: Any = _UNSET):
        self.graph = graph
        if node is _FIRST:
            node = graph.first_node()
        elif node is not None and not graph.is_node(node):
            raise UsageError(f"{node!r} is not a node of this graph")
        self.node = node
        self._set_edge(edge)

    def _set_edge(self, edge: Any) -> None:
        if self.node is None:
            self.edge = None
        elif edge is _UNSET:
            self.edge = self._first(self.node)
        elif edge is not None and self._fixed_end(edge) == self.node:
            self.edge = edge
        else:
            # a pair that breaks the invariant yields an iterator without edge
            self.edge = None

    def valid(self) -> bool:
        return self.edge is not None

    def eol(self) -> bool:
        return self.edge is None

    def has_node(self) -> bool:
        return self.node is not None

    def get_node(self):
        return self.node

    def get_edge(self):
        return self.edge

    def succ(self):
        e = self.edge
        if e is None:
            raise UsageError("succ on an invalid adjacency iterator")
        self.edge = self._advance(e)
        return self

    def curr_adj(self):
        """A fresh iterator fixed at the node across the current edge."""
        e = self.edge
        if e is None:
            raise UsageError("curr_adj on an invalid adjacency iterator")
        return type(self)(self.graph, self._far_end(e))

    def adj_node(self):
        """The node across the current edge."""
        if self.edge is None:
            raise UsageError("adj_node on an invalid adjacency iterator")
        return self._far_end(self.edge)

    def reset(self):
        self.edge = self._first(self.node) if self.node is not None else None
        return self

    def make_invalid(self):
        self.node = None
        self.edge = None
        return self

    def update(self, node: Any, edge: Any = _UNSET):
        """Move to *node*; with *edge*, keep it only if it is incident to *node*."""
        if node is not None and not self.graph.is_node(node):
            raise UsageError(f"{node!r} is not a node of this graph")
        self.node = node
        self._set_edge(edge)
        return self

    def update_edge(self, edge: Any):
        """Move to *edge* within the adjacency of the fixed node."""
        self._set_edge(edge)
        return self

    def delete(self) -> None:
        """Delete the current edge; the iterator keeps its node but loses the edge."""
        if self.edge is None:
            raise UsageError("delete on an invalid adjacency iterator")
        self.graph.del_edge(self.edge)
        self.edge = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, _Base) or other._kind != self._kind:
            return NotImplemented
        return self.graph is other.graph and self.node == other.node and self.edge == other.edge

    def __repr__(self) -> str:
        return f"{type(self).__name__}(node={self.node!r}, edge={self.edge!r})"


class OutAdjIt(_AdjIt):
    """Iterator over the outgoing edges of a fixed node."""

    __slots__ = ()
    _kind = "out"

    def _first(self, v):
        return self.graph.first_out(v)

    def _advance(self, e):
        return self.graph.advance_out(e)

    def _fixed_end(self, e):
        return self.graph.source(e)

    def _far_end(self, e):
        return self.graph.target(e)

    def retreat(self) -> OutAdjIt:
        if self.edge is None:
            raise UsageError("retreat on an invalid adjacency iterator")
        self.edge = self.graph.retreat_out(self.edge)
        return self

    def insert(self, other: _AdjIt) -> OutAdjIt:
        """Add an edge from the fixed node to ``other``'s node and move to it."""
        if self.node is None or other.node is None:
            raise UsageError("insert needs two iterators that hold nodes")
        self.edge = self.graph.new_edge(self.node, other.node)
        return self


class InAdjIt(_AdjIt):
    """Iterator over the incoming edges of a fixed node."""

    __slots__ = ()
    _kind = "in"

    def _first(self, v):
        return self.graph.first_in(v)

    def _advance(self, e):
        return self.graph.advance_in(e)

    def _fixed_end(self, e):
        return self.graph.target(e)

    def _far_end(self, e):
        return self.graph.source(e)

    def insert(self, other: _AdjIt) -> InAdjIt:
        """Add an edge from ``other``'s node to the fixed node and move to it."""
        if self.node is None or other.node is None:
            raise UsageError("insert needs two iterators that hold nodes")
        self.edge = self.graph.new_edge(other.node, self.node)
        return self


# -- backend-tuned variants ---------------------------------------------------
# Each overrides only the hot operations (succ, curr_adj) and trusts the
# iterator's own invariant instead of re-validating handles.

def _invalid_step():
    return UsageError("step on an invalid adjacency iterator")


class _AdjListOut(OutAdjIt):
    __slots__ = ()

    def succ(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        self.edge = self.graph._next_out[e]
        return self

    def curr_adj(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        g = self.graph
        t = g._tgt[e]
        it = object.__new__(_AdjListOut)
        it.graph = g
        it.node = t
        it.edge = g._first_out[t]
        return it


class _AdjListIn(InAdjIt):
    __slots__ = ()

    def succ(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        self.edge = self.graph._next_in[e]
        return self

    def curr_adj(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        g = self.graph
        s = g._src[e]
        it = object.__new__(_AdjListIn)
        it.graph = g
        it.node = s
        it.edge = g._first_in[s]
        return it


class _CompactOut(OutAdjIt):
    __slots__ = ()

    def succ(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        e += 1
        self.edge = e if e < self.graph.begin[self.node + 1] else None
        return self

    def curr_adj(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        g = self.graph
        t = g.tgt[e]
        b = g.begin
        it = object.__new__(_CompactOut)
        it.graph = g
        it.node = t
        it.edge = b[t] if b[t] < b[t + 1] else None
        return it


class _CompleteOut(OutAdjIt):
    __slots__ = ()

    def succ(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        t = e[1] + 1
        self.edge = (e[0], t) if t < self.graph.n else None
        return self

    def curr_adj(self):
        e = self.edge
        if e is None:
            raise _invalid_step()
        it = object.__new__(_CompleteOut)
        it.graph = self.graph
        t = e[1]
        it.node = t
        it.edge = (t, 0)
        return it


register_specialization(AdjListGraph, OutAdjIt, _AdjListOut)
register_specialization(AdjListGraph, InAdjIt, _AdjListIn)
register_specialization(CompactGraph, OutAdjIt, _CompactOut)
register_specialization(ImplicitCompleteGraph, OutAdjIt, _CompleteOut)
