"""Deletion/contraction engine against the brute-force and Tutte routes."""

import random

import pytest

from kappatools.corpus import (
    complete_graph,
    connected_simple_graphs,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_forest,
)
from kappatools.errors import GraphInputError
from kappatools.graphs import Multigraph
from kappatools.kappa import kappa, kappa_with_trace
from kappatools.orientations import kappa_partition_bruteforce
from kappatools.tutte import tutte_eval

TWO_TRIANGLES = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))


@pytest.mark.parametrize("n", [1, 2, 4, 7])
def test_paths_give_one(n):
    assert kappa(path_graph(n)).value == 1


def test_random_forests_give_one():
    rng = random.Random(2)
    for _ in range(50):
        assert kappa(random_forest(rng)).value == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_cycles(n):
    assert kappa(cycle_graph(n)).value == n - 1


def test_cycle_counts_grow_by_one():
    values = [kappa(cycle_graph(n)).value for n in range(3, 9)]
    assert all(b - a == 1 for a, b in zip(values, values[1:]))


def test_disjoint_triangles_multiply():
    assert kappa(TWO_TRIANGLES).value == 4


def test_k4():
    assert kappa(complete_graph(4)).value == 6


def test_parallel_edges_are_collapsed():
    doubled = Multigraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))
    assert kappa(doubled).value == kappa(cycle_graph(3)).value


def test_loops_rejected():
    with pytest.raises(GraphInputError):
        kappa(Multigraph(2, ((0, 0), (0, 1))))


def test_empty_and_edgeless_graphs():
    assert kappa(Multigraph(0, ())).value == 1
    assert kappa(Multigraph(5, ())).value == 1


def test_matches_bruteforce_exhaustively_up_to_4_vertices():
    for g in connected_simple_graphs(4):
        assert kappa(g).value == kappa_partition_bruteforce(g).class_count


def test_value_is_one_exactly_when_no_cycles_survive_pruning():
    rng = random.Random(12)
    from kappatools.corpus import random_multigraph

    for _ in range(60):
        g = random_multigraph(rng, max_vertices=6, max_edges=9, allow_loops=False)
        value = kappa(g).value
        assert value >= 1
        pruned = g.simplify().graph.cycle_subgraph()
        assert (value == 1) == (pruned.m == 0)


def test_matches_bruteforce_and_tutte_on_random_graphs():
    rng = random.Random(17)
    for _ in range(40):
        g = random_connected_graph(rng, max_edges=11, max_vertices=7)
        value = kappa(g).value
        assert value == kappa_partition_bruteforce(g).class_count
        assert value == tutte_eval(g, 1, 0)


def test_edge_choice_does_not_matter():
    rng = random.Random(23)
    for _ in range(25):
        g = random_connected_graph(rng, max_edges=10, max_vertices=6)
        expected = kappa(g).value
        for trial in range(4):
            chooser = random.Random(trial)
            assert kappa(g, rng=chooser).value == expected


def test_cache_free_mode_agrees():
    g = complete_graph(5)
    cached = kappa(g)
    uncached = kappa(g, use_cache=False)
    assert cached.value == uncached.value
    assert cached.cache_stats.hits > 0
    assert uncached.cache_stats.hits == 0


def test_shared_cache_is_reused_across_calls():
    cache = {}
    first = kappa(complete_graph(4), cache=cache)
    again = kappa(complete_graph(4), cache=cache)
    assert first.value == again.value == 6
    assert again.cache_stats.misses == 0


# ----- traces -----

def test_tree_trace_is_single_base_node():
    result = kappa_with_trace(path_graph(5))
    assert result.trace.rule == "base"
    assert result.trace.children == ()
    assert result.value == 1


def test_triangle_trace_shape():
    result = kappa_with_trace(cycle_graph(3))
    trace = result.trace
    assert trace.rule == "recursion"
    assert trace.edge == (0, 1)
    assert [c.rule for c in trace.children] == ["base", "base"]
    assert trace.value == 2


def test_k4_trace_leaf_count_equals_value():
    result = kappa_with_trace(complete_graph(4))
    assert result.trace.leaf_count() == result.value == 6


def test_bridge_prune_appears_for_triangle_with_tail():
    g = Multigraph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))
    trace = kappa_with_trace(g).trace
    assert trace.rule == "bridge-prune"
    assert len(trace.children) == 1
    assert trace.children[0].rule == "recursion"


def test_product_rule_for_disjoint_pieces():
    trace = kappa_with_trace(TWO_TRIANGLES).trace
    assert trace.rule == "product"
    assert len(trace.children) == 2
    assert trace.value == 4


def test_trace_json_shape():
    node = kappa_with_trace(cycle_graph(3)).trace.to_json()
    assert set(node) == {"key", "rule", "edge", "value", "children"}
    assert node["edge"] == [0, 1]
    assert all(set(c) == set(node) for c in node["children"])
