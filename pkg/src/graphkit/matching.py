"""Maximum-cardinality matching.

The search grows an alternating tree from an unmatched root.  Nodes carry
an even or odd label; ``LIST`` holds labeled nodes waiting to be examined
and is processed first-in first-out, so the tree grows breadth first.

* An even node scans its neighbours: an unlabeled unmatched neighbour ends
  the search with an augmenting path, an unlabeled matched one is labeled
  odd.
* An odd node looks at its mate and labels it even.

In general mode, meeting an even neighbour from an even node, or an odd
mate from an odd node, closes an odd cycle (a blossom).  The blossom is
contracted into its base on a tree-mode :class:`ContractedGraph`, so the
search continues on the contracted view as if the blossom were one even
node.  After the search every blossom is expanded again, newest first, and
the matching inside it is recomputed by matching every second cycle edge
starting next to the node that is matched outside the blossom.

Graphs are undirected and given as symmetric directed graphs: each edge
``{u, v}`` is present as ``(u, v)`` and ``(v, u)``.  Only out-adjacency is
used.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Any, Iterable

from .accessors import NODE, ComputedAccessor, node_store
from .algorithms.base import AlgorithmObject, Tracer
from .contraction import ContractedGraph, ListCoordinator, TwoPathContractor
from .errors import InputError, InvariantError, UsageError
from .iterators import NodeIt, OutAdjIt
from .kernel import AdjListGraph, GraphKernel


class Label(Enum):
    UNLABELED = 0
    EVEN = 1
    ODD = 2


class Matching:
    """A set of node pairs, no two sharing a node."""

    def __init__(self, pairs: Iterable[tuple[Any, Any]] = ()):
        self.mate: dict[Any, Any] = {}
        for u, v in pairs:
            if u == v or u in self.mate or v in self.mate:
                raise InputError(f"pair ({u!r}, {v!r}) shares a node with another pair")
            self.mate[u] = v
            self.mate[v] = u

    def pairs(self) -> list[tuple[Any, Any]]:
        """Each matched pair once, smaller node first, sorted."""
        return sorted((u, v) for u, v in self.mate.items() if u < v)

    def is_matched(self, v: Any) -> bool:
        return v in self.mate

    def matched_nodes(self) -> set:
        return set(self.mate)

    def __len__(self) -> int:
        return len(self.mate) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matching) and self.mate == other.mate

    def __repr__(self) -> str:
        return f"Matching({self.pairs()!r})"


def symmetric_graph(n: int, pairs: Iterable[tuple[int, int]]) -> AdjListGraph:
    """Adjacency-list graph with both directions of every undirected pair."""
    g = AdjListGraph(n)
    for u, v in pairs:
        if u == v:
            raise InputError(f"self-loop at {u!r} cannot be matched")
        g.new_edge(u, v)
        g.new_edge(v, u)
    return g


def undirected_pairs(graph: GraphKernel) -> list[tuple[Any, Any]]:
    """Distinct node pairs joined by an edge in either direction, loops dropped."""
    seen = set()
    for e in graph.edges():
        u, v = graph.source(e), graph.target(e)
        if u != v:
            seen.add((u, v) if u < v else (v, u))
    return sorted(seen)


def check_symmetric(graph: GraphKernel) -> None:
    ends = {}
    for e in graph.edges():
        k = (graph.source(e), graph.target(e))
        ends[k] = ends.get(k, 0) + 1
    for (u, v), c in ends.items():
        if ends.get((v, u), 0) != c:
            raise InputError(f"edge ({u!r}, {v!r}) has no reverse twin; matching needs a symmetric graph")


def is_bipartite(graph: GraphKernel) -> bool:
    side: dict[Any, int] = {}
    for s in graph.nodes():
        if s in side:
            continue
        side[s] = 0
        todo = [s]
        while todo:
            u = todo.pop()
            for e in graph.out_edges(u):
                v = graph.target(e)
                if v not in side:
                    side[v] = 1 - side[u]
                    todo.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def is_matching(graph: GraphKernel, m: Matching) -> bool:
    """True if every pair of ``m`` is an edge of ``graph`` and no node is used twice."""
    adj = {(graph.source(e), graph.target(e)) for e in graph.edges()}
    for u, v in m.mate.items():
        if m.mate.get(v) != u or ((u, v) not in adj and (v, u) not in adj):
            return False
    return True


def augment(m: Matching, path: list, graph: GraphKernel | None = None) -> Matching:
    """Return ``m`` xor the edges of ``path`` (a node sequence); ``path`` must be augmenting."""
    if len(path) < 2 or len(path) % 2:
        raise InputError("an augmenting path has an odd number of edges")
    if len(set(path)) != len(path):
        raise InputError("an augmenting path visits every node once")
    if m.is_matched(path[0]) or m.is_matched(path[-1]):
        raise InputError("an augmenting path starts and ends at unmatched nodes")
    if graph is not None:
        adj = {(graph.source(e), graph.target(e)) for e in graph.edges()}
    for k in range(len(path) - 1):
        u, v = path[k], path[k + 1]
        if graph is not None and (u, v) not in adj and (v, u) not in adj:
            raise InputError(f"({u!r}, {v!r}) is not an edge")
        if (m.mate.get(u) == v) != (k % 2 == 1):
            raise InputError("path does not alternate between unmatched and matched edges")
    out = Matching()
    out.mate = dict(m.mate)
    for k in range(0, len(path), 2):
        u, v = path[k], path[k + 1]
        out.mate[u] = v
        out.mate[v] = u
    return out


def brute_force_max_matching(graph: GraphKernel | list, max_edges: int = 80) -> int:
    """Exact maximum matching size by branching over edges (include or skip).

    Accepts a graph or a list of undirected pairs.  Refuses inputs with more
    than ``max_edges`` distinct pairs.
    """
    pairs = graph if isinstance(graph, list) else undirected_pairs(graph)
    pairs = sorted({(min(u, v), max(u, v)) for u, v in pairs if u != v})
    if len(pairs) > max_edges:
        raise UsageError(f"{len(pairs)} edges exceed the brute-force limit of {max_edges}")
    nodes = {x for p in pairs for x in p}
    best = 0

    def go(k: int, used: frozenset, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + min(len(pairs) - k, (len(nodes) - len(used)) // 2) <= best:
            return
        for j in range(k, len(pairs)):
            u, v = pairs[j]
            if u not in used and v not in used:
                go(j + 1, used | {u, v}, size + 1)
                if size + 1 + (len(nodes) - len(used) - 2) // 2 <= best:
                    return

    go(0, frozenset(), 0)
    return best


class _Blossom:
    __slots__ = ("base", "cycle", "links")

    def __init__(self, base: Any, cycle: list, links: list):
        self.base = base
        self.cycle = cycle    # child representatives in cycle order, base first
        self.links = links    # links[k]: original (x, y) joining cycle[k] and cycle[k+1]


class MaximumMatching(AlgorithmObject):
    """Maximum matching as a loop kernel: one ``next()`` handles one root.

    A node iterator walks the nodes.  Each step searches from the current
    node if it is unmatched, augments on success, expands every blossom and
    moves on.  ``mode`` is ``"general"`` (blossom shrinking) or
    ``"bipartite"`` (labels only; correct on bipartite graphs).

    The algorithm object checks its own structural guarantees as it goes and
    raises :class:`InvariantError` on a violation: at most n/2 blossoms per
    search, blossom bases even, the matched node set only growing, and the
    matching staying valid after every expansion with its size growing by
    half the blossom length minus one.
    """

    def __init__(self, graph: GraphKernel, mode: str = "general", *, tracer: Tracer | None = None):
        if mode not in ("general", "bipartite"):
            raise ValueError("mode must be 'general' or 'bipartite'")
        check_symmetric(graph)
        self.graph = graph
        self.mode = mode
        self.tracer = tracer
        self.mate = node_store(graph)
        self.label = node_store(graph)
        self.pred = node_store(graph)
        self.it = NodeIt(graph)
        self.cg: ContractedGraph | None = None
        self.LIST: deque = deque()
        self.blist: list[_Blossom] = []
        self.root: Any = None
        self.found: Any = None
        self.augmentations = 0
        self.searches = 0
        self.contractions_per_search: list[int] = []
        self.expansions = 0
        self._skip_matched()

    # -- loop kernel ------------------------------------------------------------
    def _skip_matched(self) -> None:
        it, mate = self.it, self.mate
        while it.valid() and mate[it.node] is not None:
            it.succ()

    def finished(self) -> bool:
        return not self.it.valid()

    def current(self) -> Any:
        """Node iterator at the root of the next search."""
        return self.it if self.it.valid() else None

    def next(self) -> bool:
        """Search from the current root; augment if possible.  Returns whether it augmented."""
        if not self.it.valid():
            raise self._finished_error()
        before = self._matched_set()
        root = self.it.node
        found = self.search(root)
        if found is not None:
            self._augment_contracted(found)
            self.augmentations += 1
        self.unshrink()
        after = self._matched_set()
        if not before <= after:
            raise InvariantError("a matched node became unmatched")
        if found is not None and len(after) != len(before) + 2:
            raise InvariantError("augmentation did not add exactly one pair")
        self._check_valid()
        tr = self.tracer
        if tr is not None:
            tr.emit(f"search {tr.node_label(root)} => {'augment' if found is not None else 'fail'}",
                    " ".join(f"{tr.node_label(u)}-{tr.node_label(v)}" for u, v in self.matching().pairs()) or "-",
                    "-", "search", root)
        self.it.succ()
        self._skip_matched()
        return found is not None

    def matching(self) -> Matching:
        m = Matching()
        mate = self.mate
        m.mate = {v: mate[v] for v in self.graph.nodes() if mate[v] is not None}
        return m

    def run(self) -> Matching:
        self.finish_algo()
        return self.matching()

    # -- search ---------------------------------------------------------------------
    def search(self, root: Any) -> Any:
        """Grow an alternating tree from ``root``; return the unmatched node reached, or None."""
        g = self.graph
        self.cg = ContractedGraph(g, "tree")
        for v in g.nodes():
            self.label[v] = Label.UNLABELED
            self.pred[v] = None
        self.blist = []
        self.searches += 1
        self.root = root
        self.found = None
        self.label[root] = Label.EVEN
        self.LIST = deque([root])
        LIST, cg, label = self.LIST, self.cg, self.label
        while LIST and self.found is None:
            x = LIST.popleft()
            if cg.rep(x) != x:
                continue    # absorbed by a blossom; its representative is queued
            if label[x] is Label.EVEN:
                self.examine_even(x)
            else:
                self.examine_odd(x)
        self.contractions_per_search.append(len(self.blist))
        if len(self.blist) > g.number_of_nodes() // 2:
            raise InvariantError(f"{len(self.blist)} blossoms in one search exceed n/2")
        return self.found

    def examine_even(self, i: Any) -> None:
        cg, label, mate = self.cg, self.label, self.mate
        ai = OutAdjIt(cg, i)
        while ai.valid():
            e = ai.edge
            j = cg.target(e)
            lj = label[j]
            if lj is Label.UNLABELED:
                label[j] = Label.ODD
                self.pred[j] = e
                if mate[j] is None:
                    self.found = j
                    return
                self.LIST.append(j)
            elif lj is Label.EVEN and self.mode == "general":
                self.contract_blossom(i, j, e)
                return
            ai.succ()

    def examine_odd(self, i: Any) -> None:
        cg, label = self.cg, self.label
        z = self.mate[i]
        j = cg.rep(z)
        lj = label[j]
        if lj is Label.UNLABELED:
            label[j] = Label.EVEN
            self.pred[j] = self._edge_between(i, z)
            self.LIST.append(j)
        elif lj is Label.ODD and self.mode == "general":
            self.contract_blossom(i, j, self._edge_between(i, z))

    def _edge_between(self, u: Any, v: Any) -> Any:
        g = self.graph
        for e in g.out_edges(u):
            if g.target(e) == v:
                return e
        raise InvariantError(f"matched pair ({u!r}, {v!r}) is not an edge")

    def _parent(self, r: Any) -> Any:
        e = self.pred[r]
        return None if e is None else self.cg.rep(self.graph.source(e))

    def contract_blossom(self, i: Any, j: Any, e: Any) -> None:
        """Shrink the odd cycle closed by edge ``e`` between tree nodes ``i`` and ``j``."""
        cg, g = self.cg, self.graph
        # walk both legs in lock step; the first node reached from both sides is the base
        legs = ([i], [j])
        seen = ({i}, {j})
        heads = [i, j]
        base = None
        for _ in range(g.number_of_nodes() + 1):
            for s in (0, 1):
                if heads[s] is not None and heads[s] in seen[1 - s]:
                    base = heads[s]
                    break
            if base is not None:
                break
            for s in (0, 1):
                if heads[s] is not None:
                    p = self._parent(heads[s])
                    heads[s] = p
                    if p is not None:
                        legs[s].append(p)
                        seen[s].add(p)
            if heads[0] is None and heads[1] is None:
                break
        if base is None:
            raise InvariantError("predecessor legs do not meet")
        leg_i = legs[0][:legs[0].index(base)]
        leg_j = legs[1][:legs[1].index(base)]
        if self.label[base] is not Label.EVEN:
            raise InvariantError(f"blossom base {base!r} is not even")

        # cycle order: base, down leg i to i, across e to j, up leg j
        cycle = [base] + leg_i[::-1] + leg_j
        pred = self.pred
        links = []
        for r in leg_i[::-1]:
            p = pred[r]
            links.append((g.source(p), g.target(p)))
        links.append((g.source(e), g.target(e)))
        for r in leg_j:
            p = pred[r]
            links.append((g.target(p), g.source(p)))
        if len(cycle) % 2 == 0 or len(links) != len(cycle):
            raise InvariantError(f"blossom of length {len(cycle)} is not an odd cycle")

        def parent_in_blossom(v: Any) -> Any:
            r = cg.rep(v)
            return None if r == base else g.source(pred[r])

        contractor = TwoPathContractor(cg, ComputedAccessor(parent_in_blossom, NODE), ListCoordinator)
        contractor.contract(i, j, base=[base])
        self.blist.append(_Blossom(base, cycle, links))
        self.label[base] = Label.EVEN
        self.LIST.append(base)
        tr = self.tracer
        if tr is not None:
            tr.emit(f"blossom {' '.join(map(tr.node_label, cycle))}", tr.nodes(self.LIST), "-",
                    "blossom", base)

    # -- augmentation and expansion ---------------------------------------------
    def _augment_contracted(self, y: Any) -> None:
        """Flip the path from ``y`` to the root in the contracted view.

        Only the pair endpoints are rewritten; stale mates left inside
        blossoms are repaired during expansion.
        """
        g, cg, mate = self.graph, self.cg, self.mate
        root = cg.rep(self.root)
        x = y
        for _ in range(g.number_of_nodes() + 1):
            e = self.pred[x]
            a, b = g.source(e), g.target(e)
            mate[a] = b
            mate[b] = a
            u = cg.rep(a)
            if u == root:
                return
            x = self._parent(u)
        raise InvariantError("augmenting path does not reach the root")

    def _view_pairs(self) -> int:
        """Consistent matched pairs between distinct visible nodes; checks one per node."""
        cg, mate = self.cg, self.mate
        per_rep: dict[Any, int] = {}
        count = 0
        for v in self.graph.nodes():
            w = mate[v]
            if w is None or mate[w] != v:
                continue
            r = cg.rep(v)
            if r == cg.rep(w):
                continue
            per_rep[r] = per_rep.get(r, 0) + 1
            if per_rep[r] > 1:
                raise InvariantError(f"visible node {r!r} is matched twice")
            count += 1
        return count // 2

    def unshrink(self) -> None:
        """Expand every blossom of the last search, newest first, rematching each cycle."""
        cg, mate = self.cg, self.mate
        while self.blist:
            bl = self.blist.pop()
            before = self._view_pairs()
            members = cg.members(bl.base)
            inside = set(members)
            cg.expand(bl.base)
            for v in members:
                w = mate[v]
                if w is None:
                    continue
                if w in inside:
                    if cg.rep(w) != cg.rep(v):
                        mate[v] = None
                elif mate[w] != v:
                    mate[v] = None
            entry = 0
            for k, c in enumerate(bl.cycle):
                if any(mate[v] is not None and mate[v] not in inside for v in cg.members(c)):
                    entry = k
                    break
            L = len(bl.cycle)
            for s in range(1, L, 2):
                x, y = bl.links[(entry + s) % L]
                mate[x] = y
                mate[y] = x
            self.expansions += 1
            after = self._view_pairs()
            if after != before + (L - 1) // 2:
                raise InvariantError(f"expansion of a {L}-blossom changed the matching size "
                                     f"from {before} to {after}")

    # -- checks ---------------------------------------------------------------------
    def _matched_set(self) -> set:
        mate = self.mate
        return {v for v in self.graph.nodes() if mate[v] is not None}

    def _check_valid(self) -> None:
        mate = self.mate
        for v in self.graph.nodes():
            w = mate[v]
            if w is not None and mate[w] != v:
                raise InvariantError(f"node {v!r} is matched to {w!r} but not vice versa")


def max_matching(graph: GraphKernel, mode: str = "general") -> Matching:
    return MaximumMatching(graph, mode).run()
