from __future__ import annotations

import io

import pytest

from graphkit.errors import InputError
from graphkit.generate import generate_random, random_dag, random_pairs, random_weights
from graphkit.io import parse_edge_list, read_edge_list, write_edge_list
from graphkit.kernel import AdjListGraph

from .oracles import edge_pairs, has_cycle


def test_parse_directed_with_weights_and_comments():
    el = parse_edge_list("# demo\n3 2 directed\n0 1 2.5\n\n1 2\n")
    assert el.directed and edge_pairs(el.graph) == [(0, 1), (1, 2)]
    assert el.weight == [2.5, 1] and el.weight_of(0) == 2.5


def test_parse_undirected_doubles_edges():
    el = parse_edge_list("2 1 undirected\n0 1 7\n")
    assert edge_pairs(el.graph) == [(0, 1), (1, 0)] and el.weight == [7, 7]


@pytest.mark.parametrize("text", [
    "",
    "3 1\n0 1\n",
    "3 x directed\n",
    "3 2 directed\n0 1\n",
    "3 1 directed\n0 3\n",
    "3 1 directed\n0 a\n",
    "3 1 directed\n0 1 -4\n",
    "3 1 directed\n0 1 heavy\n",
    "3 1 directed\n0 1 2 3\n",
    "-1 0 directed\n",
])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_edge_list(text)


def test_read_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_edge_list(tmp_path / "nope.el")


def test_write_read_round_trip(tmp_path):
    g = AdjListGraph(4, [(0, 1), (3, 2), (1, 1)])
    buf = io.StringIO()
    write_edge_list(buf, g, [5, 6, 7].__getitem__)
    p = tmp_path / "g.el"
    p.write_text(buf.getvalue())
    el = read_edge_list(p)
    assert edge_pairs(el.graph) == edge_pairs(g) and el.weight == [5, 6, 7]


def test_write_renumbers_after_deletion():
    g = AdjListGraph(3, [(0, 2)])
    g.del_node(1)
    buf = io.StringIO()
    write_edge_list(buf, g)
    assert buf.getvalue() == "2 1 directed\n0 1\n"


def test_random_pairs_are_distinct_non_loops():
    pairs = random_pairs(20, 300, seed=3)
    assert len(set(pairs)) == 300 and all(u != v for u, v in pairs)
    assert random_pairs(20, 300, seed=3) == pairs
    assert len(random_pairs(5, 20, seed=1)) == 20
    with pytest.raises(InputError):
        random_pairs(5, 21, seed=1)


def test_generate_random_counts():
    g = generate_random(50, 400, seed=2)
    assert g.number_of_nodes() == 50 and g.number_of_edges() == 400


def test_random_dag_is_acyclic_and_dense_when_asked():
    g = random_dag(8, 28, seed=5)
    assert g.number_of_edges() == 28 and not has_cycle(list(range(8)), edge_pairs(g))
    g = random_dag(40, 200, seed=6)
    pairs = edge_pairs(g)
    assert len(set(pairs)) == 200 and not has_cycle(list(range(40)), pairs)
    with pytest.raises(InputError):
        random_dag(4, 7, seed=1)


def test_random_weights_range():
    w = random_weights(1000, seed=9)
    assert min(w) >= 1 and max(w) <= 100 and w == random_weights(1000, seed=9)


def test_saturated_generator_gives_every_ordered_pair():
    g = generate_random(4, 12, seed=1)
    assert sorted(edge_pairs(g)) == [(u, v) for u in range(4) for v in range(4) if u != v]
