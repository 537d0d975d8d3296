"""Contracted views of a graph.

A :class:`ContractedGraph` shows a backend graph with groups of nodes merged
into supernodes, without touching the backend.  Each group is named by its
representative, one of its original nodes.  Edges inside a group of two
or more nodes are hidden, so a self-loop on an untouched node stays
visible.  An edge between groups appears with its endpoints replaced by
the representatives.

The view is itself a graph kernel, so every plain iterator and algorithm
runs on it unchanged.  ``NodeCIt`` and friends are provided as named
variants for readability.

Two bookkeeping modes exist:

* ``"flat"``: contracting an existing supernode merges into it; ``expand``
  dissolves a supernode into singletons in one go.
* ``"tree"``: every contraction is a level of a contraction tree and
  ``expand`` undoes exactly one level, top-down.

Representatives are stored explicitly for every original node and members
of a group are chained in a linked list, so ``rep`` lookups are O(1);
contracting costs O(size of the absorbed groups) and expanding O(size of
the group).
"""

from __future__ import annotations

from typing import Any, Callable

from .accessors import node_store
from .errors import InputError, UsageError
from .iterators import EdgeIt, InAdjIt, NodeIt, OutAdjIt
from .kernel import GraphKernel


class ContractionNode:
    """One contraction event: a group formed from ``children`` with representative ``rep``.

    Children are original node handles or, in tree mode, earlier
    :class:`ContractionNode` objects.
    """

    __slots__ = ("rep", "children", "last")

    def __init__(self, rep: Any, children: list, last: Any):
        self.rep = rep
        self.children = children
        self.last = last

    def __repr__(self) -> str:
        return f"ContractionNode(rep={self.rep!r}, children={self.children!r})"


class ContractedGraph(GraphKernel):
    """Read-only contracted view over ``backend``."""

    def __init__(self, backend: GraphKernel, mode: str = "flat"):
        if mode not in ("flat", "tree"):
            raise ValueError("mode must be 'flat' or 'tree'")
        self.backend = backend
        self.mode = mode
        self._rep = node_store(backend)
        self._chain_next = node_store(backend)
        self._chain_last = node_store(backend)
        for v in backend.nodes():
            self._rep[v] = v
            self._chain_last[v] = v
        self._top: dict[Any, ContractionNode] = {}
        self.events: list[ContractionNode] = []
        self._visible = backend.number_of_nodes()
        self.ops = 0

    # -- partition queries --------------------------------------------------------
    def rep(self, v: Any) -> Any:
        if not self.backend.is_node(v):
            raise UsageError(f"{v!r} is not a node of the underlying graph")
        return self._rep[v]

    def equal(self, v1: Any, v2: Any) -> bool:
        return self.rep(v1) == self.rep(v2)

    def contracted(self, v: Any) -> bool:
        """True if *v* lies in a group of more than one node."""
        return self.rep(v) in self._top

    def members(self, v: Any) -> list:
        """Original nodes of the group containing *v*, representative first."""
        r = self.rep(v)
        return self._walk(r, self._chain_last[r])

    def _walk(self, head: Any, tail: Any) -> list:
        out = []
        x = head
        nxt = self._chain_next
        while True:
            out.append(x)
            if x == tail:
                return out
            x = nxt[x]

    def top_level(self) -> dict[Any, ContractionNode]:
        """Visible supernodes keyed by representative."""
        return dict(self._top)

    # -- contraction ------------------------------------------------------------
    def contract(self, v1: Any, v2: Any) -> Any:
        """Merge the groups of *v1* and *v2*; the representative of *v1* names the result."""
        if self.equal(v1, v2):
            raise UsageError(f"{v1!r} and {v2!r} are already in the same group")
        return self.contract_list([v1, v2])

    def contract_list(self, nodes: list) -> Any:
        """Merge the groups of all *nodes* in one event; the first node's representative names it."""
        reps: list = []
        seen = set()
        for x in nodes:
            r = self.rep(x)
            if r not in seen:
                seen.add(r)
                reps.append(r)
        if len(reps) < 2:
            raise UsageError("a contraction needs at least two distinct groups")
        children: list = []
        for r in reps:
            sub = self._top.pop(r, None)
            if sub is None:
                children.append(r)
            elif self.mode == "flat":
                children.extend(self._walk(r, sub.last))
            else:
                children.append(sub)
        head = reps[0]
        rep, nxt, last = self._rep, self._chain_next, self._chain_last
        for r in reps[1:]:
            nxt[last[head]] = r
            for x in self._walk(r, last[r]):
                rep[x] = head
                self.ops += 1
            last[head] = last[r]
        node = ContractionNode(head, children, last[head])
        self._top[head] = node
        self.events.append(node)
        self._visible -= len(reps) - 1
        return head

    def expand(self, v: Any) -> list:
        """Undo the contraction that formed *v*'s group and return the released representatives.

        Flat mode releases every original node.  Tree mode pops one level and
        requires *v* to be the representative of a visible supernode.
        """
        r = self.rep(v)
        if self.mode == "tree" and r != v:
            raise UsageError(f"{v!r} is nested inside {r!r}; expand the outer group first")
        node = self._top.pop(r, None)
        if node is None:
            raise UsageError(f"{v!r} is not a contracted node")
        rep, nxt, last = self._rep, self._chain_next, self._chain_last
        released = []
        for c in node.children:
            if isinstance(c, ContractionNode):
                head, tail = c.rep, c.last
                self._top[head] = c
            else:
                head = tail = c
            for x in self._walk(head, tail):
                rep[x] = head
                self.ops += 1
            nxt[tail] = None
            last[head] = tail
            released.append(head)
        self._visible += len(node.children) - 1
        return released

    def expand_all(self) -> None:
        while self._top:
            self.expand(next(iter(self._top)))

    # -- kernel interface ------------------------------------------------------------
    def is_node(self, v: Any) -> bool:
        return self.backend.is_node(v) and self._rep[v] == v

    def is_edge(self, e: Any) -> bool:
        b = self.backend
        return b.is_edge(e) and not self._inner(b.source(e), b.target(e))

    def _inner(self, u: Any, v: Any) -> bool:
        # self-loops on uncontracted nodes stay visible
        r = self._rep[u]
        return r == self._rep[v] and r in self._top

    def node_id_bound(self) -> int | None:
        return self.backend.node_id_bound()

    def edge_id_bound(self) -> int | None:
        return self.backend.edge_id_bound()

    def number_of_nodes(self) -> int:
        return self._visible

    def number_of_edges(self) -> int:
        return sum(1 for _ in self.edges())

    def _skip_hidden_nodes(self, v: Any) -> Any:
        adv, rep = self.backend.advance_node, self._rep
        while v is not None and rep[v] != v:
            self.ops += 1
            v = adv(v)
        return v

    def first_node(self) -> Any:
        return self._skip_hidden_nodes(self.backend.first_node())

    def advance_node(self, v: Any) -> Any:
        if v is None:
            return None
        return self._skip_hidden_nodes(self.backend.advance_node(v))

    def _skip_inner_edges(self, e: Any) -> Any:
        b, inner = self.backend, self._inner
        while e is not None and inner(b.source(e), b.target(e)):
            self.ops += 1
            e = b.advance_edge(e)
        return e

    def first_edge(self) -> Any:
        return self._skip_inner_edges(self.backend.first_edge())

    def advance_edge(self, e: Any) -> Any:
        if e is None:
            return None
        return self._skip_inner_edges(self.backend.advance_edge(e))

    def _scan(self, x: Any, e: Any, r: Any, advance: Callable, first: Callable, far: Callable) -> Any:
        """From edge *e* of member *x*, find the next edge of group *r* leading outside it."""
        rep, nxt = self._rep, self._chain_next
        tail = self._chain_last[r]
        grouped = r in self._top
        while True:
            while e is not None:
                self.ops += 1
                if not grouped or rep[far(e)] != r:
                    return e
                e = advance(e)
            if x == tail:
                return None
            x = nxt[x]
            e = first(x)

    def first_out(self, v: Any) -> Any:
        if v is None:
            return None
        b = self.backend
        r = self.rep(v)
        return self._scan(r, b.first_out(r), r, b.advance_out, b.first_out, b.target)

    def advance_out(self, e: Any) -> Any:
        if e is None:
            return None
        b = self.backend
        x = b.source(e)
        return self._scan(x, b.advance_out(e), self._rep[x], b.advance_out, b.first_out, b.target)

    def first_in(self, v: Any) -> Any:
        if v is None:
            return None
        b = self.backend
        r = self.rep(v)
        return self._scan(r, b.first_in(r), r, b.advance_in, b.first_in, b.source)

    def advance_in(self, e: Any) -> Any:
        if e is None:
            return None
        b = self.backend
        x = b.target(e)
        return self._scan(x, b.advance_in(e), self._rep[x], b.advance_in, b.first_in, b.source)

    def source(self, e: Any) -> Any:
        return self._rep[self.backend.source(e)]

    def target(self, e: Any) -> Any:
        return self._rep[self.backend.target(e)]


class NodeCIt(NodeIt):
    """Node iterator over a contracted view: one item per visible group."""

    __slots__ = ()


class EdgeCIt(EdgeIt):
    """Edge iterator over a contracted view: skips edges inside a group."""

    __slots__ = ()


class OutAdjCIt(OutAdjIt):
    """Out-adjacency over a contracted view: the fixed node is a group, edges leave it."""

    __slots__ = ()


class InAdjCIt(InAdjIt):
    """In-adjacency over a contracted view."""

    __slots__ = ()


# -- coordinators ---------------------------------------------------------------

class PairCoordinator:
    """Contracts the walker's node with its predecessor at every step."""

    def __init__(self, graph: ContractedGraph, base: list | None = None):
        self.graph = graph
        self.base = base
        self.it: NodeIt | None = None
        self.pred: Any = None
        self.events = 0

    def init(self, it: NodeIt, pred: Any) -> None:
        self.it = it
        self.pred = pred

    def pred_node(self) -> Any:
        return self.pred.get(self.it)

    def succ(self) -> None:
        p = self.pred_node()
        if p is None:
            raise UsageError("the walker has no predecessor")
        g = self.graph
        if not g.equal(self.it.node, p):
            g.contract(self.it.node, p)
            self.events += 1
        self.it.update(p)

    def start_contraction(self) -> None:
        pass


class ListCoordinator(PairCoordinator):
    """Collects the visited nodes in ``base`` and contracts them all at once.

    ``base`` may be pre-seeded by the caller; its first entry names the
    resulting group.  Several coordinators may share one base.
    """

    def __init__(self, graph: ContractedGraph, base: list | None = None):
        super().__init__(graph, [] if base is None else base)

    def succ(self) -> None:
        p = self.pred_node()
        if p is None:
            raise UsageError("the walker has no predecessor")
        self.base.append(self.it.node)
        self.it.update(p)

    def start_contraction(self) -> None:
        self.base.append(self.it.node)
        g = self.graph
        if len({g.rep(x) for x in self.base}) > 1:
            g.contract_list(self.base)
            self.events += 1


# -- contractors ------------------------------------------------------------------

class _Contractor:
    def __init__(self, graph: ContractedGraph, pred: Any,
                 coordinator: type[PairCoordinator] = PairCoordinator):
        self.graph = graph
        self.pred = pred
        self.coordinator = coordinator

    def _walker(self, start: Any, base: list | None) -> PairCoordinator:
        coord = self.coordinator(self.graph, base)
        node = start.node if hasattr(start, "node") else start
        coord.init(NodeIt(self.graph.backend, node), self.pred)
        return coord

    def _limit(self) -> int:
        return self.graph.backend.number_of_nodes()


class CycleContractor(_Contractor):
    """Contracts the cycle of the predecessor structure that passes through a start node."""

    def contract(self, start: Any, base: list | None = None) -> PairCoordinator:
        coord = self._walker(start, base)
        origin = coord.it.node
        steps = 0
        while True:
            if coord.pred_node() is None:
                raise InputError("predecessor chain ends before closing a cycle")
            coord.succ()
            steps += 1
            if coord.it.node == origin:
                break
            if steps > self._limit():
                raise InputError("predecessor chain does not return to its start")
        coord.start_contraction()
        return coord


class NPathContractor(_Contractor):
    """Contracts several predecessor paths that end in one common root.

    With ``interleaved=True`` the walkers advance in lock step, which is the
    natural schedule when the paths have equal length; the final grouping is
    the same either way.
    """

    def contract(self, *starts: Any, interleaved: bool = False,
                 base: list | None = None) -> list[PairCoordinator]:
        if not starts:
            raise UsageError("at least one path is needed")
        if self.coordinator is ListCoordinator and base is None:
            base = []
        coords = [self._walker(s, base) for s in starts]
        limit = self._limit()
        if interleaved:
            steps = 0
            active = [c for c in coords if c.pred_node() is not None]
            while active:
                for c in active:
                    c.succ()
                steps += 1
                if steps > limit:
                    raise InputError("predecessor paths do not reach a root")
                active = [c for c in active if c.pred_node() is not None]
        else:
            for c in coords:
                steps = 0
                while c.pred_node() is not None:
                    c.succ()
                    steps += 1
                    if steps > limit:
                        raise InputError("predecessor path does not reach a root")
        roots = {self.graph.rep(c.it.node) for c in coords}
        if len(roots) != 1:
            raise InputError("predecessor paths end in different roots")
        # one shared base is contracted once; pair coordinators have nothing left to do
        coords[0].start_contraction()
        return coords


class TwoPathContractor(NPathContractor):
    """Contracts two predecessor paths that meet only at their common root."""

    def contract(self, start1: Any, start2: Any, *, interleaved: bool = False,
                 base: list | None = None) -> list[PairCoordinator]:
        return super().contract(start1, start2, interleaved=interleaved, base=base)
