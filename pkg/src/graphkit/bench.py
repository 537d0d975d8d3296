"""Generic algorithms versus hand-written loops over the adjacency-list arrays.

Every baseline produces exactly the output of its generic counterpart on
the same graph (same visit order, same component numbers, same
distances), so each benchmark instance first checks equality and only
then reports timings.  Overheads are informational; machines and
interpreters differ too much for them to be asserted tightly.
"""

from __future__ import annotations

import csv
import heapq
import math
import time
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, TextIO

from .accessors import HandlerAccessor, EDGE
from .algorithms import (bfs_order, dfs_order, shortest_distances, strong_components,
                         topological_order)
from .errors import InvariantError
from .generate import generate_random, random_dag, random_weights
from .kernel import AdjListGraph, compact_from


# -- baselines --------------------------------------------------------------------

def baseline_bfs(g: AdjListGraph, s: int) -> list:
    first, nxt, tgt = g._first_out, g._next_out, g._tgt
    seen = [False] * len(first)
    seen[s] = True
    q = deque([s])
    order = []
    while q:
        u = q.popleft()
        order.append(u)
        e = first[u]
        while e is not None:
            v = tgt[e]
            if not seen[v]:
                seen[v] = True
                q.append(v)
            e = nxt[e]
    return order


def baseline_dfs(g: AdjListGraph, s: int) -> list:
    first, nxt, tgt = g._first_out, g._next_out, g._tgt
    seen = [False] * len(first)
    seen[s] = True
    st = [s]
    order = []
    while st:
        u = st.pop()
        order.append(u)
        e = first[u]
        while e is not None:
            v = tgt[e]
            if not seen[v]:
                seen[v] = True
                st.append(v)
            e = nxt[e]
    return order


def baseline_scc(g: AdjListGraph) -> dict:
    first, nxt, tgt = g._first_out, g._next_out, g._tgt
    ifirst, inxt, src = g._first_in, g._next_in, g._src
    n = len(first)
    seen = [False] * n
    finished = []
    v = g._first_node
    while v is not None:
        if not seen[v]:
            seen[v] = True
            stack = [v]
            cur = [first[v]]
            while stack:
                e = cur[-1]
                if e is None:
                    finished.append(stack.pop())
                    cur.pop()
                    continue
                w = tgt[e]
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    cur.append(first[w])
                else:
                    cur[-1] = nxt[e]
        v = g._next_node[v]
    seen = [False] * n
    comp = {}
    count = -1
    while finished:
        r = finished.pop()
        if seen[r]:
            continue
        count += 1
        seen[r] = True
        st = [r]
        while st:
            u = st.pop()
            comp[u] = count
            e = ifirst[u]
            while e is not None:
                x = src[e]
                if not seen[x]:
                    seen[x] = True
                    st.append(x)
                e = inxt[e]
    return comp


def baseline_topo(g: AdjListGraph) -> list:
    first, nxt, tgt = g._first_out, g._next_out, g._tgt
    indeg = [0] * len(first)
    e = g._first_edge
    while e is not None:
        indeg[tgt[e]] += 1
        e = g._next_edge[e]
    q = deque()
    v = g._first_node
    while v is not None:
        if indeg[v] == 0:
            q.append(v)
        v = g._next_node[v]
    order = []
    while q:
        u = q.popleft()
        order.append(u)
        e = first[u]
        while e is not None:
            w = tgt[e]
            indeg[w] -= 1
            if indeg[w] == 0:
                q.append(w)
            e = nxt[e]
    return order


def baseline_dijkstra(g: AdjListGraph, weight: list, s: int) -> dict:
    first, nxt, tgt = g._first_out, g._next_out, g._tgt
    dist = [math.inf] * len(first)
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        e = first[u]
        while e is not None:
            v = tgt[e]
            c = d + weight[e]
            if c < dist[v]:
                dist[v] = c
                heapq.heappush(heap, (c, v))
            e = nxt[e]
    return {v: dist[v] for v in g.nodes()}


# -- harness ------------------------------------------------------------------------

ALGORITHMS = ("bfs", "dfs", "scc", "topo", "dijkstra")
FIELDS = ("algo", "backend", "n", "m", "generic_ns", "baseline_ns", "overhead_pct", "equal")


@dataclass
class BenchRow:
    algo: str
    backend: str
    n: int
    m: int
    generic_ns: int
    baseline_ns: int
    equal: bool

    @property
    def overhead_pct(self) -> float:
        if self.baseline_ns == 0:
            return 0.0
        return (self.generic_ns - self.baseline_ns) / self.baseline_ns * 100

    @property
    def ratio(self) -> float:
        return self.generic_ns / self.baseline_ns if self.baseline_ns else 1.0

    def as_dict(self) -> dict:
        return {"algo": self.algo, "backend": self.backend, "n": self.n, "m": self.m,
                "generic_ns": self.generic_ns, "baseline_ns": self.baseline_ns,
                "overhead_pct": f"{self.overhead_pct:.1f}", "equal": str(self.equal).lower()}


def _best_time(fn: Callable[[], Any], repeat: int) -> tuple[int, Any]:
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        result = fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def _jobs(algo: str, g: AdjListGraph, weight: list, source: int) -> tuple[Callable, Callable]:
    if algo == "bfs":
        return lambda h: bfs_order(h, source), lambda: baseline_bfs(g, source)
    if algo == "dfs":
        return lambda h: dfs_order(h, source), lambda: baseline_dfs(g, source)
    if algo == "scc":
        return strong_components, lambda: baseline_scc(g)
    if algo == "topo":
        return topological_order, lambda: baseline_topo(g)
    if algo == "dijkstra":
        return (lambda h: shortest_distances(h, HandlerAccessor(weight, EDGE), source),
                lambda: baseline_dijkstra(g, weight, source))
    raise ValueError(f"unknown algorithm {algo!r}")


def bench_instance(algo: str, g: AdjListGraph, weight: list, *, source: int = 0, repeat: int = 1,
                   compact: bool = False) -> list[BenchRow]:
    """Time one algorithm on one graph; raises :class:`InvariantError` if outputs differ."""
    generic, baseline = _jobs(algo, g, weight, source)
    n, m = g.number_of_nodes(), g.number_of_edges()
    base_ns, expected = _best_time(baseline, repeat)
    gen_ns, got = _best_time(lambda: generic(g), repeat)
    if got != expected:
        raise InvariantError(f"{algo}: generic and baseline results differ on n={n}, m={m}")
    rows = [BenchRow(algo, "adjlist", n, m, gen_ns, base_ns, True)]
    if compact:
        cg = compact_from(g)
        # compact edge handles follow the conversion order; carry the weights over
        cw = [weight[cg.edge_origin[e]] for e in range(m)]
        cgeneric, _ = _jobs(algo, g, cw, source)
        c_ns, cgot = _best_time(lambda: cgeneric(cg), repeat)
        if cgot != expected:
            raise InvariantError(f"{algo}: compact backend result differs on n={n}, m={m}")
        rows.append(BenchRow(algo, "compact", n, m, c_ns, base_ns, True))
    return rows


def run_grid(n: int = 1000, sizes: tuple[int, ...] = (10_000, 100_000, 400_000), *, seed: int = 1,
             algorithms: tuple[str, ...] = ALGORITHMS, repeat: int = 1, compact: bool = True,
             progress: Callable[[BenchRow], None] | None = None) -> list[BenchRow]:
    """The benchmark grid: every algorithm on one random graph per edge count.

    Topological sort gets a random DAG with the same counts.
    """
    rows: list[BenchRow] = []
    for m in sizes:
        g = generate_random(n, m, seed)
        w = random_weights(m, seed)
        dag = None
        for algo in algorithms:
            if algo == "topo":
                if dag is None:
                    dag = random_dag(n, min(m, n * (n - 1) // 2), seed)
                graph, weight = dag, w
            else:
                graph, weight = g, w
            for row in bench_instance(algo, graph, weight, repeat=repeat,
                                      compact=compact and algo == "dijkstra"):
                rows.append(row)
                if progress is not None:
                    progress(row)
    return rows


def write_csv(out: TextIO, rows: list[BenchRow]) -> None:
    w = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
