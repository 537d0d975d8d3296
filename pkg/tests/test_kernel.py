from __future__ import annotations

import pytest

from graphkit.errors import CapabilityError, UsageError
from graphkit.generate import generate_random
from graphkit.kernel import AdjListGraph, CompactGraph, ImplicitCompleteGraph, compact_from

from .fixtures import bfs_example, dfs_example


def walk(first, advance):
    out = []
    x = first
    while x is not None:
        out.append(x)
        x = advance(x)
    return out


def test_advance_node_order_and_end():
    g = AdjListGraph(3)
    assert g.advance_node(0) == 1
    assert g.advance_node(2) is None
    assert g.advance_node(None) is None


def test_node_walk_exhausts_after_n_steps():
    g, _ = dfs_example()
    v, steps = 0, 0
    while v is not None:
        v = g.advance_node(v)
        steps += 1
    assert steps == g.number_of_nodes() == 6
    # one more application stays at the end
    assert g.advance_node(v) is None


def test_edge_walk_counts_m():
    g = generate_random(30, 90, seed=4)
    edges = walk(g.first_edge(), g.advance_edge)
    assert len(edges) == 90
    assert g.advance_edge(edges[-1]) is None


def test_last_edges_of_six():
    g = AdjListGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    assert g.advance_edge(4) == 5
    assert g.advance_edge(5) is None


def test_out_and_in_order():
    g, label = dfs_example()
    out1 = [label[e] for e in walk(g.first_out(1), g.advance_out)]
    assert out1 == ["c", "d"]
    assert [label[e] for e in walk(g.first_in(0), g.advance_in)] == ["b"]


def test_single_out_edge_then_end():
    g = AdjListGraph(2, [(0, 1)])
    assert g.advance_out(g.first_out(0)) is None


def test_advance_out_of_none_is_none():
    assert AdjListGraph(1).advance_out(None) is None


@pytest.mark.parametrize("make", [lambda g: g, compact_from])
def test_out_in_duality(make):
    g = make(generate_random(20, 70, seed=2))
    for e in g.edges():
        assert list(g.out_edges(g.source(e))).count(e) == 1
        assert list(g.in_edges(g.target(e))).count(e) == 1
    assert sum(1 for v in g.nodes() for _ in g.out_edges(v)) == g.number_of_edges()


def test_mutation_counts():
    g = AdjListGraph()
    for _ in range(3):
        g.new_node()
    g.new_edge(0, 1)
    assert (g.number_of_nodes(), g.number_of_edges()) == (3, 1)


def test_delete_node_removes_incident_edges():
    g = AdjListGraph(3, [(0, 1), (1, 2), (2, 0)])
    g.del_node(1)
    assert g.number_of_edges() == 1
    assert [(g.source(e), g.target(e)) for e in g.edges()] == [(2, 0)]


def test_deleted_edge_never_visited():
    g = AdjListGraph(3, [(0, 1), (1, 2), (2, 0)])
    g.del_edge(1)
    assert list(g.edges()) == [0, 2]
    assert list(g.out_edges(1)) == []


def test_stale_handles_are_rejected():
    g = AdjListGraph(3, [(0, 1)])
    g.del_node(2)
    assert not g.is_node(2)
    with pytest.raises(UsageError):
        g.advance_node(2)
    with pytest.raises(UsageError):
        g.first_out(2)
    g.del_edge(0)
    with pytest.raises(UsageError):
        g.source(0)
    # handles are not reused
    assert g.new_node() == 3


def test_foreign_handle_is_usage_error():
    g = AdjListGraph(2)
    with pytest.raises(UsageError):
        g.advance_node(5)
    with pytest.raises(UsageError):
        g.advance_node("x")


def test_new_node_goes_last():
    g = AdjListGraph(2)
    v = g.new_node()
    assert list(g.nodes())[-1] == v


def test_retreat_functions():
    g = AdjListGraph(3, [(0, 1), (0, 2)])
    assert g.retreat_node(1) == 0
    assert g.retreat_node(0) is None
    assert g.retreat_out(1) == 0


def test_read_only_backends_refuse_mutation():
    for g in (compact_from(AdjListGraph(2, [(0, 1)])), ImplicitCompleteGraph(3)):
        assert not g.mutable
        with pytest.raises(CapabilityError):
            g.new_node()
        with pytest.raises(CapabilityError):
            g.del_edge(g.first_edge())


def test_compact_keeps_order_and_intervals():
    g = generate_random(25, 80, seed=9)
    c = compact_from(g)
    assert list(c.nodes()) == list(range(25))
    for v in c.nodes():
        b, e = c.interval(v)
        assert all(c.source(x) == v for x in range(b, e))
        assert [c.target(x) for x in range(b, e)] == [g.target(x) for x in g.out_edges(v)]
    bounds = [c.interval(v) for v in c.nodes()]
    assert bounds[0][0] == 0 and bounds[-1][1] == c.number_of_edges()
    assert all(bounds[k][1] == bounds[k + 1][0] for k in range(len(bounds) - 1))


def test_compact_of_empty_graph():
    c = compact_from(AdjListGraph())
    assert (c.number_of_nodes(), c.number_of_edges()) == (0, 0)
    assert c.first_node() is None and c.first_edge() is None


def test_star_intervals():
    g = AdjListGraph(6, [(0, k) for k in range(1, 6)])
    c = compact_from(g)
    assert c.interval(0) == (0, 5)
    assert all(c.interval(v)[1] - c.interval(v)[0] == 0 for v in range(1, 6))


def test_compact_renumbers_surviving_nodes():
    g = AdjListGraph(4, [(0, 3), (3, 1), (1, 0)])
    g.del_node(2)
    c = compact_from(g)
    assert c.node_origin == [0, 1, 3]
    assert sorted((c.source(e), c.target(e)) for e in c.edges()) == [(0, 2), (1, 0), (2, 1)]


def test_compact_graph_direct_construction():
    c = CompactGraph(3, [0, 2, 2, 3], [1, 2, 0])
    assert [(c.source(e), c.target(e)) for e in c.edges()] == [(0, 1), (0, 2), (2, 0)]
    assert list(c.in_edges(0)) == [2]


def test_complete_out_sequence():
    g = ImplicitCompleteGraph(3)
    assert walk(g.first_out(1), g.advance_out) == [(1, 0), (1, 1), (1, 2)]
    assert walk(g.first_in(2), g.advance_in) == [(0, 2), (1, 2), (2, 2)]


def test_complete_degree_and_scan():
    n = 7
    g = ImplicitCompleteGraph(n)
    assert all(sum(1 for _ in g.out_edges(v)) == n for v in g.nodes())
    assert sum(1 for _ in g.edges()) == n * n == g.number_of_edges()
    assert g.edge_records_allocated == 0


def test_complete_rejects_foreign_edges():
    g = ImplicitCompleteGraph(3)
    with pytest.raises(UsageError):
        g.target((0, 3))
    with pytest.raises(UsageError):
        g.advance_out((5, 0))


def test_node_and_edge_laws_across_backends():
    g = bfs_example()
    for h in (g, compact_from(g)):
        nodes = list(h.nodes())
        edges = list(h.edges())
        assert len(set(nodes)) == len(nodes) == h.number_of_nodes()
        assert len(set(edges)) == len(edges) == h.number_of_edges()
