"""Graph kernels: the navigation interface every iterator is built on, plus three backends.

A kernel exposes nodes and edges as opaque handles and the orderings over
them.  ``None`` is the invalid handle for every backend.

The interface is split in two groups.  Forward navigation (13 functions)
is all a read-only backend must provide:

    number_of_nodes, number_of_edges, first_node, advance_node,
    first_edge, advance_edge, first_out, advance_out, first_in,
    advance_in, source, target, is_node

Mutation and backward navigation (6 functions) complete the full interface:

    new_node, new_edge, del_node, del_edge, retreat_node, retreat_out

Read-only backends raise :class:`CapabilityError` from the second group.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Any

from .errors import CapabilityError, UsageError

Node = Any
Edge = Any


class GraphKernel:
    """Base class of all backends.

    Subclasses override the forward navigation functions.  The mutation and
    backward group defaults to raising :class:`CapabilityError`.
    """

    mutable = False

    # -- forward navigation -------------------------------------------------
    def number_of_nodes(self) -> int:
        raise NotImplementedError

    def number_of_edges(self) -> int:
        raise NotImplementedError

    def first_node(self) -> Node:
        raise NotImplementedError

    def advance_node(self, v: Node) -> Node:
        raise NotImplementedError

    def first_edge(self) -> Edge:
        raise NotImplementedError

    def advance_edge(self, e: Edge) -> Edge:
        raise NotImplementedError

    def first_out(self, v: Node) -> Edge:
        raise NotImplementedError

    def advance_out(self, e: Edge) -> Edge:
        raise NotImplementedError

    def first_in(self, v: Node) -> Edge:
        raise NotImplementedError

    def advance_in(self, e: Edge) -> Edge:
        raise NotImplementedError

    def source(self, e: Edge) -> Node:
        raise NotImplementedError

    def target(self, e: Edge) -> Node:
        raise NotImplementedError

    def is_node(self, v: Node) -> bool:
        raise NotImplementedError

    def is_edge(self, e: Edge) -> bool:
        raise NotImplementedError

    # -- mutation and backward navigation -------------------------------------
    def new_node(self) -> Node:
        raise CapabilityError(f"{type(self).__name__} is read-only")

    def new_edge(self, u: Node, v: Node) -> Edge:
        raise CapabilityError(f"{type(self).__name__} is read-only")

    def del_node(self, v: Node) -> None:
        raise CapabilityError(f"{type(self).__name__} is read-only")

    def del_edge(self, e: Edge) -> None:
        raise CapabilityError(f"{type(self).__name__} is read-only")

    def retreat_node(self, v: Node) -> Node:
        raise CapabilityError(f"{type(self).__name__} has no backward node order")

    def retreat_out(self, e: Edge) -> Edge:
        raise CapabilityError(f"{type(self).__name__} has no backward adjacency order")

    # -- conveniences built on the interface ----------------------------------
    def node_id_bound(self) -> int | None:
        """Exclusive upper bound on integer node handles, or None if handles are not small ints.

        Lets callers back node attributes with a plain list.
        """
        return None

    def edge_id_bound(self) -> int | None:
        return None

    def nodes(self) -> Iterator[Node]:
        v = self.first_node()
        while v is not None:
            yield v
            v = self.advance_node(v)

    def edges(self) -> Iterator[Edge]:
        e = self.first_edge()
        while e is not None:
            yield e
            e = self.advance_edge(e)

    def out_edges(self, v: Node) -> Iterator[Edge]:
        e = self.first_out(v)
        while e is not None:
            yield e
            e = self.advance_out(e)

    def in_edges(self, v: Node) -> Iterator[Edge]:
        e = self.first_in(v)
        while e is not None:
            yield e
            e = self.advance_in(e)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.number_of_nodes()} m={self.number_of_edges()}>"


def _bad_handle(kind: str, h: object) -> UsageError:
    return UsageError(f"{h!r} is not a live {kind} of this graph")


class AdjListGraph(GraphKernel):
    """Mutable graph stored as doubly linked lists over parallel arrays.

    Node and edge handles are integers that are never reused, so a handle
    kept past the deletion of its item is detected rather than silently
    aliasing a newer item.  Nodes, edges and each adjacency list are kept
    in insertion order.  Parallel edges and self-loops are allowed.
    """

    mutable = True

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        self._node_alive: list[bool] = []
        self._next_node: list[int | None] = []
        self._prev_node: list[int | None] = []
        self._first_node: int | None = None
        self._last_node: int | None = None
        self._n = 0

        self._edge_alive: list[bool] = []
        self._src: list[int] = []
        self._tgt: list[int] = []
        self._next_edge: list[int | None] = []
        self._prev_edge: list[int | None] = []
        self._first_edge: int | None = None
        self._last_edge: int | None = None
        self._m = 0

        self._first_out: list[int | None] = []
        self._last_out: list[int | None] = []
        self._next_out: list[int | None] = []
        self._prev_out: list[int | None] = []
        self._first_in: list[int | None] = []
        self._last_in: list[int | None] = []
        self._next_in: list[int | None] = []
        self._prev_in: list[int | None] = []

        self.edge_records_allocated = 0

        for _ in range(n):
            self.new_node()
        for u, v in edges:
            self.new_edge(u, v)

    # -- handle checks --------------------------------------------------------
    def is_node(self, v: Node) -> bool:
        return type(v) is int and 0 <= v < len(self._node_alive) and self._node_alive[v]

    def is_edge(self, e: Edge) -> bool:
        return type(e) is int and 0 <= e < len(self._edge_alive) and self._edge_alive[e]

    def _check_node(self, v: Node) -> None:
        if not (type(v) is int and 0 <= v < len(self._node_alive) and self._node_alive[v]):
            raise _bad_handle("node", v)

    def _check_edge(self, e: Edge) -> None:
        if not (type(e) is int and 0 <= e < len(self._edge_alive) and self._edge_alive[e]):
            raise _bad_handle("edge", e)

    def node_id_bound(self) -> int:
        return len(self._node_alive)

    def edge_id_bound(self) -> int:
        return len(self._edge_alive)

    # -- forward navigation -------------------------------------------------
    def number_of_nodes(self) -> int:
        return self._n

    def number_of_edges(self) -> int:
        return self._m

    def first_node(self) -> Node:
        return self._first_node

    def advance_node(self, v: Node) -> Node:
        if v is None:
            return None
        self._check_node(v)
        return self._next_node[v]

    def first_edge(self) -> Edge:
        return self._first_edge

    def advance_edge(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        return self._next_edge[e]

    def first_out(self, v: Node) -> Edge:
        if v is None:
            return None
        self._check_node(v)
        return self._first_out[v]

    def advance_out(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        return self._next_out[e]

    def first_in(self, v: Node) -> Edge:
        if v is None:
            return None
        self._check_node(v)
        return self._first_in[v]

    def advance_in(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        return self._next_in[e]

    def source(self, e: Edge) -> Node:
        self._check_edge(e)
        return self._src[e]

    def target(self, e: Edge) -> Node:
        self._check_edge(e)
        return self._tgt[e]

    # -- backward navigation --------------------------------------------------
    def last_node(self) -> Node:
        return self._last_node

    def retreat_node(self, v: Node) -> Node:
        if v is None:
            return None
        self._check_node(v)
        return self._prev_node[v]

    def retreat_out(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        return self._prev_out[e]

    def retreat_in(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        return self._prev_in[e]

    # -- mutation ---------------------------------------------------------------
    def new_node(self) -> Node:
        v = len(self._node_alive)
        self._node_alive.append(True)
        self._next_node.append(None)
        self._prev_node.append(self._last_node)
        if self._last_node is None:
            self._first_node = v
        else:
            self._next_node[self._last_node] = v
        self._last_node = v
        for arr in (self._first_out, self._last_out, self._first_in, self._last_in):
            arr.append(None)
        self._n += 1
        return v

    def new_edge(self, u: Node, v: Node) -> Edge:
        self._check_node(u)
        self._check_node(v)
        e = len(self._edge_alive)
        self._edge_alive.append(True)
        self._src.append(u)
        self._tgt.append(v)
        self._next_edge.append(None)
        self._prev_edge.append(self._last_edge)
        if self._last_edge is None:
            self._first_edge = e
        else:
            self._next_edge[self._last_edge] = e
        self._last_edge = e

        self._next_out.append(None)
        self._prev_out.append(self._last_out[u])
        if self._last_out[u] is None:
            self._first_out[u] = e
        else:
            self._next_out[self._last_out[u]] = e
        self._last_out[u] = e

        self._next_in.append(None)
        self._prev_in.append(self._last_in[v])
        if self._last_in[v] is None:
            self._first_in[v] = e
        else:
            self._next_in[self._last_in[v]] = e
        self._last_in[v] = e

        self._m += 1
        self.edge_records_allocated += 1
        return e

    def del_edge(self, e: Edge) -> None:
        self._check_edge(e)
        u, v = self._src[e], self._tgt[e]
        self._unlink(e, self._next_edge, self._prev_edge, "_first_edge", "_last_edge")
        # out list of u
        nxt, prv = self._next_out[e], self._prev_out[e]
        if prv is None:
            self._first_out[u] = nxt
        else:
            self._next_out[prv] = nxt
        if nxt is None:
            self._last_out[u] = prv
        else:
            self._prev_out[nxt] = prv
        # in list of v
        nxt, prv = self._next_in[e], self._prev_in[e]
        if prv is None:
            self._first_in[v] = nxt
        else:
            self._next_in[prv] = nxt
        if nxt is None:
            self._last_in[v] = prv
        else:
            self._prev_in[nxt] = prv
        self._next_out[e] = self._prev_out[e] = None
        self._next_in[e] = self._prev_in[e] = None
        self._edge_alive[e] = False
        self._m -= 1

    def del_node(self, v: Node) -> None:
        """Delete *v* together with all incident edges."""
        self._check_node(v)
        while self._first_out[v] is not None:
            self.del_edge(self._first_out[v])
        while self._first_in[v] is not None:
            self.del_edge(self._first_in[v])
        self._unlink(v, self._next_node, self._prev_node, "_first_node", "_last_node")
        self._node_alive[v] = False
        self._n -= 1

    def _unlink(self, h, nxt_arr, prv_arr, first_attr, last_attr) -> None:
        nxt, prv = nxt_arr[h], prv_arr[h]
        if prv is None:
            setattr(self, first_attr, nxt)
        else:
            nxt_arr[prv] = nxt
        if nxt is None:
            setattr(self, last_attr, prv)
        else:
            prv_arr[nxt] = prv
        nxt_arr[h] = prv_arr[h] = None


class CompactGraph(GraphKernel):
    """Read-only graph in compressed sparse row layout.

    Nodes are ``0..n-1``.  Edges are ``0..m-1`` and are stored grouped by
    source, so the out-edges of ``v`` are exactly the interval
    ``[begin[v], begin[v+1])``.  A second index groups edge ids by target
    for in-adjacency.
    """

    __slots__ = ("_n", "_m", "begin", "src", "tgt", "_in_begin", "_in_order", "_in_pos",
                 "node_origin", "edge_origin")

    def __init__(self, n: int, begin: list[int], tgt: list[int],
                 node_origin: list | None = None, edge_origin: list | None = None):
        if len(begin) != n + 1 or begin[0] != 0 or begin[-1] != len(tgt):
            raise UsageError("offset array does not describe the edge array")
        self._n = n
        self._m = len(tgt)
        self.begin = begin
        self.tgt = tgt
        src = [0] * self._m
        for v in range(n):
            if begin[v] > begin[v + 1]:
                raise UsageError("offsets must be non-decreasing")
            for e in range(begin[v], begin[v + 1]):
                src[e] = v
        self.src = src
        # in-adjacency: counting sort of edge ids by target, stable in edge order
        counts = [0] * (n + 1)
        for t in tgt:
            counts[t + 1] += 1
        for v in range(n):
            counts[v + 1] += counts[v]
        self._in_begin = counts[:]
        fill = counts[:-1]
        order = [0] * self._m
        pos = [0] * self._m
        for e, t in enumerate(tgt):
            order[fill[t]] = e
            pos[e] = fill[t]
            fill[t] += 1
        self._in_order = order
        self._in_pos = pos
        self.node_origin = node_origin if node_origin is not None else list(range(n))
        self.edge_origin = edge_origin if edge_origin is not None else list(range(self._m))

    @property
    def edge_records_allocated(self) -> int:
        return self._m

    def is_node(self, v: Node) -> bool:
        return type(v) is int and 0 <= v < self._n

    def is_edge(self, e: Edge) -> bool:
        return type(e) is int and 0 <= e < self._m

    def node_id_bound(self) -> int:
        return self._n

    def edge_id_bound(self) -> int:
        return self._m

    def number_of_nodes(self) -> int:
        return self._n

    def number_of_edges(self) -> int:
        return self._m

    def first_node(self) -> Node:
        return 0 if self._n else None

    def advance_node(self, v: Node) -> Node:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        return v + 1 if v + 1 < self._n else None

    def first_edge(self) -> Edge:
        return 0 if self._m else None

    def advance_edge(self, e: Edge) -> Edge:
        if e is None:
            return None
        if not self.is_edge(e):
            raise _bad_handle("edge", e)
        return e + 1 if e + 1 < self._m else None

    def first_out(self, v: Node) -> Edge:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        b = self.begin[v]
        return b if b < self.begin[v + 1] else None

    def advance_out(self, e: Edge) -> Edge:
        if e is None:
            return None
        if not self.is_edge(e):
            raise _bad_handle("edge", e)
        return e + 1 if e + 1 < self.begin[self.src[e] + 1] else None

    def first_in(self, v: Node) -> Edge:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        b = self._in_begin[v]
        return self._in_order[b] if b < self._in_begin[v + 1] else None

    def advance_in(self, e: Edge) -> Edge:
        if e is None:
            return None
        if not self.is_edge(e):
            raise _bad_handle("edge", e)
        p = self._in_pos[e] + 1
        return self._in_order[p] if p < self._in_begin[self.tgt[e] + 1] else None

    def source(self, e: Edge) -> Node:
        if not self.is_edge(e):
            raise _bad_handle("edge", e)
        return self.src[e]

    def target(self, e: Edge) -> Node:
        if not self.is_edge(e):
            raise _bad_handle("edge", e)
        return self.tgt[e]

    def interval(self, v: Node) -> tuple[int, int]:
        """The ``[begin, end)`` range of edge ids leaving *v*."""
        return self.begin[v], self.begin[v + 1]


def compact_from(g: GraphKernel) -> CompactGraph:
    """Build a :class:`CompactGraph` copy of *g*.

    Node ``i`` of the copy is the ``i``-th node of *g* in its node order, and
    each out-list keeps the order of *g*.  ``node_origin`` and
    ``edge_origin`` map back to the handles of *g*.
    """
    origin = list(g.nodes())
    index = {v: i for i, v in enumerate(origin)}
    begin = [0]
    tgt: list[int] = []
    edge_origin = []
    for v in origin:
        for e in g.out_edges(v):
            tgt.append(index[g.target(e)])
            edge_origin.append(e)
        begin.append(len(tgt))
    return CompactGraph(len(origin), begin, tgt, origin, edge_origin)


class ImplicitCompleteGraph(GraphKernel):
    """The complete directed graph on ``0..n-1``, with self-pairs, stored as just ``n``.

    Edges are ``(s, t)`` tuples synthesized on demand; no edge record is ever
    stored, so ``edge_records_allocated`` stays 0.  Edge order is
    lexicographic, out-lists run over ``t = 0..n-1`` and in-lists over
    ``s = 0..n-1``.
    """

    __slots__ = ("n",)
    edge_records_allocated = 0

    def __init__(self, n: int):
        if n < 0:
            raise UsageError("node count must be non-negative")
        self.n = n

    def is_node(self, v: Node) -> bool:
        return type(v) is int and 0 <= v < self.n

    def is_edge(self, e: Edge) -> bool:
        return (type(e) is tuple and len(e) == 2
                and self.is_node(e[0]) and self.is_node(e[1]))

    def _check_edge(self, e: Edge) -> None:
        if not self.is_edge(e):
            raise _bad_handle("edge", e)

    def node_id_bound(self) -> int:
        return self.n

    def number_of_nodes(self) -> int:
        return self.n

    def number_of_edges(self) -> int:
        return self.n * self.n

    def first_node(self) -> Node:
        return 0 if self.n else None

    def advance_node(self, v: Node) -> Node:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        return v + 1 if v + 1 < self.n else None

    def first_edge(self) -> Edge:
        return (0, 0) if self.n else None

    def advance_edge(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        s, t = e
        if t + 1 < self.n:
            return (s, t + 1)
        if s + 1 < self.n:
            return (s + 1, 0)
        return None

    def first_out(self, v: Node) -> Edge:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        return (v, 0)

    def advance_out(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        s, t = e
        return (s, t + 1) if t + 1 < self.n else None

    def first_in(self, v: Node) -> Edge:
        if v is None:
            return None
        if not self.is_node(v):
            raise _bad_handle("node", v)
        return (0, v)

    def advance_in(self, e: Edge) -> Edge:
        if e is None:
            return None
        self._check_edge(e)
        s, t = e
        return (s + 1, t) if s + 1 < self.n else None

    def source(self, e: Edge) -> Node:
        if type(e) is tuple and len(e) == 2:
            s, t = e
            if type(s) is int and type(t) is int and 0 <= s < self.n and 0 <= t < self.n:
                return s
        raise _bad_handle("edge", e)

    def target(self, e: Edge) -> Node:
        if type(e) is tuple and len(e) == 2:
            s, t = e
            if type(s) is int and type(t) is int and 0 <= s < self.n and 0 <= t < self.n:
                return t
        raise _bad_handle("edge", e)
