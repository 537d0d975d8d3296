from __future__ import annotations

import io
import random

import pytest

from graphkit.bench import (FIELDS, BenchRow, baseline_bfs, baseline_dfs, baseline_dijkstra,
                            baseline_scc, baseline_topo, bench_instance, run_grid, write_csv)
from graphkit.accessors import EDGE, HandlerAccessor
from graphkit.algorithms import (bfs_order, dfs_order, shortest_distances, strong_components,
                                 topological_order)
from graphkit.errors import InvariantError
from graphkit.generate import generate_random, random_dag, random_weights


@pytest.mark.parametrize("seed", range(5))
def test_baselines_reproduce_generic_output(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 80)
    m = rng.randint(0, min(4 * n, n * (n - 1)))
    g = generate_random(n, m, seed)
    w = random_weights(m, seed)
    assert baseline_bfs(g, 0) == bfs_order(g, 0)
    assert baseline_dfs(g, 0) == dfs_order(g, 0)
    assert baseline_scc(g) == strong_components(g)
    assert baseline_dijkstra(g, w, 0) == shortest_distances(g, HandlerAccessor(w, EDGE), 0)
    dag = random_dag(n, min(m, n * (n - 1) // 2), seed)
    assert baseline_topo(dag) == topological_order(dag)


def test_bench_instance_rows():
    g = generate_random(50, 200, 1)
    rows = bench_instance("dijkstra", g, random_weights(200, 1), compact=True)
    assert [r.backend for r in rows] == ["adjlist", "compact"]
    assert all(r.equal and r.generic_ns > 0 and r.baseline_ns > 0 for r in rows)


def test_bench_instance_detects_mismatch(monkeypatch):
    import graphkit.bench as bench
    monkeypatch.setattr(bench, "baseline_bfs", lambda g, s: [])
    with pytest.raises(InvariantError):
        bench.bench_instance("bfs", generate_random(10, 20, 1), [])


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        bench_instance("flow", generate_random(3, 2, 1), [1, 1])


def test_row_arithmetic():
    r = BenchRow("bfs", "adjlist", 1, 1, 300, 200, True)
    assert r.overhead_pct == 50.0 and r.ratio == 1.5
    assert BenchRow("bfs", "adjlist", 1, 1, 300, 0, True).overhead_pct == 0.0


def test_grid_and_csv():
    seen = []
    rows = run_grid(40, (100, 300), seed=2, progress=seen.append)
    assert rows == seen and len(rows) == 2 * (5 + 1)
    buf = io.StringIO()
    write_csv(buf, rows)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(FIELDS) and len(lines) == len(rows) + 1


def test_trivial_graph_bench():
    rows = bench_instance("bfs", generate_random(2, 1, 1), [1])
    assert rows[0].equal and rows[0].n == 2
