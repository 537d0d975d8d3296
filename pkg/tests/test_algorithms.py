from __future__ import annotations

import math
import random
from pathlib import Path

import pytest

from graphkit.accessors import EDGE, HandlerAccessor, index_distance_length, node_array
from graphkit.algorithms import (BreadthFirstSearch, DepthFirstSearch, DfsStep, Dijkstra,
                                 DijkstraPhase, PredecessorRecorder, SccPhase,
                                 SimpleDepthFirstSearch, StronglyConnectedComponents,
                                 TopologicalSort, Tracer, bfs_order, dfs_order, shortest_distances,
                                 strong_components, topological_order)
from graphkit.errors import CyclicInputError, InputError, UsageError
from graphkit.generate import generate_random, random_dag
from graphkit.iterators import InAdjIt
from graphkit.kernel import AdjListGraph, ImplicitCompleteGraph, compact_from

from .fixtures import BFS_EDGES, bfs_example, dfs_example
from .oracles import (bellman_ford, bfs_levels, edge_pairs, is_topological, partition_of,
                      scc_partition, textbook_dijkstra)

DATA = Path(__file__).parent / "data"


def random_graph(rng, n, m):
    return AdjListGraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])


# -- breadth-first and simple depth-first -------------------------------------------------

def test_simple_dfs_trace_replay():
    g, label = dfs_example()
    tr = Tracer(edge_label=label.__getitem__)
    SimpleDepthFirstSearch(g, 0, tracer=tr).finish_algo()
    assert tr.text() == (DATA / "dfs_trace.golden").read_text()
    assert len(tr.rows) == 42


def test_simple_dfs_order():
    g, _ = dfs_example()
    assert dfs_order(g, 0) == [0, 1, 3, 4, 5, 2]


def test_bfs_inspects_edges_in_list_order():
    g = bfs_example()
    tr = Tracer()
    BreadthFirstSearch(g, 0, tracer=tr).finish_algo()
    inspected = [(g.source(s.edge), g.target(s.edge)) for kind, s in tr.events if kind == "valid"]
    assert inspected == BFS_EDGES


def test_bfs_order_respects_levels():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 25)
        g = random_graph(rng, n, rng.randint(0, 3 * n))
        order = bfs_order(g, 0)
        levels = bfs_levels(list(range(n)), edge_pairs(g), 0)
        assert sorted(order) == sorted(levels)
        assert [levels[v] for v in order] == sorted(levels[v] for v in order)


def test_traced_and_untraced_searches_agree():
    rng = random.Random(2)
    g = random_graph(rng, 20, 50)
    for cls in (BreadthFirstSearch, SimpleDepthFirstSearch):
        a, b = cls(g, 0), cls(g, 0, tracer=Tracer())
        oa, ob = [], []
        while not a.finished():
            oa.append(a.current().node)
            a.next()
        while not b.finished():
            ob.append(b.current().node)
            b.next()
        assert oa == ob


def test_search_next_after_finish():
    s = BreadthFirstSearch(AdjListGraph(1), 0).finish_algo()
    assert s.finished() and s.current() is None
    with pytest.raises(UsageError):
        s.next()


def test_search_is_resumable_with_new_seed():
    g = AdjListGraph(4, [(0, 1), (2, 3)])
    s = BreadthFirstSearch(g, 0).finish_algo()
    s.init(2)
    s.finish_algo()
    assert all(s.mark.handler)


def test_steps_generator():
    g, _ = dfs_example()
    assert len(list(SimpleDepthFirstSearch(g, 0).steps())) == 6


# -- stateful depth-first ----------------------------------------------------------------

def test_dfs_step_kinds():
    g = AdjListGraph(3, [(0, 1), (0, 2)])
    d = DepthFirstSearch(g, 0)
    kinds = list(d.steps())
    # back at 0 the iterator still points at the edge to 1, so it first moves on
    assert kinds == [DfsStep.GROW_DEPTH, DfsStep.LEAF, DfsStep.GROW_BREADTH, DfsStep.GROW_DEPTH,
                     DfsStep.LEAF, DfsStep.SHRINK]


def test_dfs_stack_is_tree_path():
    g, _ = dfs_example()
    d = DepthFirstSearch(g, 0)
    while not d.finished():
        path = [it.node for it in d.stack]
        for a, b in zip(path, path[1:]):
            assert any(g.target(e) == b for e in g.out_edges(a))
        d.next()


def test_dfs_grow_breadth():
    g = AdjListGraph(2, [(0, 1), (0, 1), (1, 0)])
    steps = list(DepthFirstSearch(g, 0).steps())
    assert DfsStep.GROW_BREADTH in steps


# -- strongly connected components -------------------------------------------------------

def test_scc_two_cycles():
    g = AdjListGraph(6, [(0, 1), (1, 2), (2, 0), (3, 2), (3, 4), (4, 5), (5, 3)])
    comp = strong_components(g)
    assert partition_of(comp) == {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    # the source component is found first
    assert comp[3] == 0 and comp[0] == 1


def test_scc_phases_and_count():
    g = AdjListGraph(3, [(0, 1)])
    alg = StronglyConnectedComponents(g)
    phases = list(alg.steps())
    assert phases[0] is SccPhase.FIRST and phases[-1] is SccPhase.SECOND
    assert alg.number_of_components == 3 and alg.finished()


def test_scc_empty_graph():
    assert StronglyConnectedComponents(AdjListGraph()).finished()


@pytest.mark.parametrize("seed", range(4))
def test_scc_random_against_reachability(seed):
    rng = random.Random(seed)
    for _ in range(25):
        n = rng.randint(1, 30)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        assert partition_of(strong_components(g)) == scc_partition(list(g.nodes()), edge_pairs(g))


def test_scc_traced_matches_untraced():
    g = generate_random(30, 80, 4)
    tr = Tracer()
    a = StronglyConnectedComponents(g, tracer=tr).finish_algo()
    assert {v: a.component.handler[v] for v in g.nodes()} == strong_components(g)
    assert tr.rows


def test_scc_with_deleted_nodes():
    g = AdjListGraph(5, [(0, 1), (1, 0), (3, 4), (4, 3), (1, 3)])
    g.del_node(2)
    assert partition_of(strong_components(g)) == {frozenset({0, 1}), frozenset({3, 4})}


# -- topological sort --------------------------------------------------------------------

def test_topo_small_dag():
    g = AdjListGraph(4, [(2, 0), (0, 1), (3, 1), (2, 3)])
    order = topological_order(g)
    assert is_topological(order, [0, 1, 2, 3], edge_pairs(g))


def test_topo_random_dags():
    for seed in range(30):
        rng = random.Random(seed)
        n = rng.randint(1, 60)
        g = random_dag(n, rng.randint(0, n * (n - 1) // 2 if n < 12 else 3 * n), seed)
        order = topological_order(g)
        assert len(order) == n and is_topological(order, list(g.nodes()), edge_pairs(g))


def test_topo_cycle():
    g = AdjListGraph(4, [(0, 1), (1, 2), (2, 1), (2, 3)])
    ts = TopologicalSort(g).finish_algo()
    assert ts.is_cyclic() and ts.emitted == 1
    with pytest.raises(CyclicInputError):
        topological_order(g)


def test_topo_self_loop_is_cycle():
    with pytest.raises(CyclicInputError):
        topological_order(AdjListGraph(2, [(0, 1), (1, 1)]))


def test_topo_current_is_next_emitted():
    g = AdjListGraph(3, [(0, 1), (1, 2)])
    ts = TopologicalSort(g, tracer=Tracer())
    while not ts.finished():
        expect = ts.current().node
        assert ts.next() == expect


# -- Dijkstra ------------------------------------------------------------------------------

def arcs_of(g, w):
    return [(g.source(e), g.target(e), w[e]) for e in g.edges()]


@pytest.mark.parametrize("seed", range(6))
def test_dijkstra_against_oracles(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 50)
    g = random_graph(rng, n, rng.randint(0, 4 * n))
    w = [rng.randint(0, 20) for _ in range(g.number_of_edges())]
    got = shortest_distances(g, HandlerAccessor(w, EDGE), 0)
    nodes = list(g.nodes())
    assert got == textbook_dijkstra(nodes, arcs_of(g, w), 0) == bellman_ford(nodes, arcs_of(g, w), 0)


def test_dijkstra_stepwise_equals_fast_path():
    rng = random.Random(9)
    g = random_graph(rng, 40, 160)
    w = [rng.randint(1, 9) for _ in range(160)]
    fast = Dijkstra(g, HandlerAccessor(w, EDGE))
    fast.seed(0)
    fast.finish_algo()
    slow = Dijkstra(g, HandlerAccessor(w, EDGE))
    slow.seed(0)
    phases = list(slow.steps())
    assert fast.distance.da.handler == slow.distance.da.handler
    assert set(phases) <= {DijkstraPhase.DEPTH, DijkstraPhase.BREADTH}


def test_dijkstra_trace_does_not_change_result():
    g = AdjListGraph(3, [(0, 1), (1, 2), (0, 2)])
    w = [1, 1, 5]
    d = Dijkstra(g, HandlerAccessor(w, EDGE), tracer=Tracer())
    d.seed(0)
    d.finish_algo()
    assert d.distance.da.handler == [0, 1, 2]
    assert d.tracer.rows[0].split("\t")[1] == "depth"


def test_dijkstra_multiple_sources():
    g = AdjListGraph(4, [(0, 1), (3, 2), (1, 2)])
    d = Dijkstra(g, HandlerAccessor([5, 1, 5], EDGE))
    d.seed(0)
    d.seed(3)
    d.finish_algo()
    assert d.distance.da.handler == [0, 5, 1, 0]


def test_dijkstra_negative_length():
    g = AdjListGraph(2, [(0, 1)])
    d = Dijkstra(g, HandlerAccessor([-1], EDGE))
    d.seed(0)
    with pytest.raises(InputError):
        d.finish_algo()
    d = Dijkstra(g, HandlerAccessor([-1], EDGE))
    d.seed(0)
    with pytest.raises(InputError):
        d.next()


def test_dijkstra_unreachable_is_inf():
    g = AdjListGraph(3, [(0, 1)])
    assert shortest_distances(g, HandlerAccessor([2], EDGE), 0)[2] == math.inf


def test_dijkstra_complete_graph():
    g = ImplicitCompleteGraph(60)
    dist = shortest_distances(g, index_distance_length(g), 0)
    assert dist == {v: v for v in range(60)}
    assert g.edge_records_allocated == 0


def test_dijkstra_over_in_edges():
    g = AdjListGraph(3, [(1, 0), (2, 1)])
    d = Dijkstra(g, HandlerAccessor([1, 1], EDGE), iterator=InAdjIt)
    d.seed(0)
    d.finish_algo()
    assert d.distance.da.handler == [0, 1, 2]


def test_predecessor_recorder_builds_shortest_path_tree():
    rng = random.Random(5)
    g = random_graph(rng, 30, 120)
    w = [rng.randint(1, 30) for _ in range(120)]
    d = Dijkstra(g, HandlerAccessor(w, EDGE))
    d.seed(0)
    rec = PredecessorRecorder(d, d.distance)
    rec.finish_algo()
    dist = d.distance.da.handler
    for v in g.nodes():
        e = rec.pred.handler[v]
        if v == 0 or dist[v] == math.inf:
            assert e is None
        else:
            assert g.target(e) == v and dist[g.source(e)] + w[e] == dist[v]


def test_predecessor_recorder_passes_through_state():
    g = AdjListGraph(2, [(0, 1)])
    d = Dijkstra(g, HandlerAccessor([3], EDGE))
    d.seed(0)
    rec = PredecessorRecorder(d, d.distance, node_array(g, None))
    assert rec.current() is d.current() and not rec.finished()
    rec.finish_algo()
    assert rec.finished() and rec.pred.handler == [None, 0]


# -- backends ------------------------------------------------------------------------------

def test_all_algorithms_agree_on_compact_image():
    rng = random.Random(21)
    for _ in range(5):
        g = random_graph(rng, 25, 70)
        w = [rng.randint(1, 9) for _ in range(70)]
        cg = compact_from(g)
        cw = [w[cg.edge_origin[e]] for e in range(70)]
        assert bfs_order(g, 0) == bfs_order(cg, 0)
        assert dfs_order(g, 0) == dfs_order(cg, 0)
        assert strong_components(g) == strong_components(cg)
        assert (shortest_distances(g, HandlerAccessor(w, EDGE), 0)
                == shortest_distances(cg, HandlerAccessor(cw, EDGE), 0))
