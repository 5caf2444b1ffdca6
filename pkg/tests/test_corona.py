import numpy as np
import pytest

from sccg.corona import (
    corona_diameter,
    corona_edge_count,
    corona_graph,
    corona_node_count,
    corona_nodes_added_at_step,
    corona_product,
)
from sccg.graph import SizeCapError, build_graph, named_seed
from tests.conftest import bfs_diameter_oracle, naive_corona_edges


def test_product_k3_k3():
    k3 = named_seed("k3")
    g, parent = corona_product(k3.graph, k3)
    assert g.node_count == 12
    assert g.edge_count == 21
    assert (parent[:3] == -1).all()
    assert parent[3:].tolist() == [0, 0, 0, 1, 1, 1, 2, 2, 2]


def test_product_single_node_k3_is_k4_shaped():
    single = build_graph([], 1)
    g, _ = corona_product(single, named_seed("k3"))
    assert g.node_count == 4
    assert g.edge_count == 6
    assert (g.degrees == 3).all()


def test_product_p2_p2_against_naive_enumeration():
    p2 = named_seed("p2")
    g, _ = corona_product(p2.graph, p2)
    edges, n = naive_corona_edges({(0, 1)}, 2, {(0, 1)}, 2)
    assert g.node_count == n == 6
    assert g.edge_count == len(edges) == 7
    assert set(g.iter_edges()) == edges


def test_node_count_formula():
    assert corona_node_count(3, 2) == 48
    assert corona_node_count(7, 0) == 7
    assert corona_node_count(2, 3) == 54


def test_nodes_added_at_step():
    assert corona_nodes_added_at_step(3, 1) == 9
    assert corona_nodes_added_at_step(3, 2) == 36
    assert corona_nodes_added_at_step(2, 1) == 4


def test_edge_count_formula():
    assert corona_edge_count(3, 3, 1) == 21
    assert corona_edge_count(4, 5, 0) == 5
    # star seed, one step, cross-checked by generation
    s3 = named_seed("s3")
    assert corona_edge_count(3, 2, 1) == 17
    g, _ = corona_product(s3.graph, s3)
    assert g.edge_count == 17


def test_diameter_formula():
    assert corona_diameter(1, 2) == 5
    assert corona_diameter(4, 0) == 4
    # cross-check the exact BFS diameter of the star product
    s3 = named_seed("s3")
    g, _ = corona_product(s3.graph, s3)
    assert corona_diameter(2, 1) == 4 == bfs_diameter_oracle(g)


def test_zero_steps_returns_the_seed():
    k3 = named_seed("k3")
    res = corona_graph(k3, 0)
    assert res.graph == k3.graph
    assert res.birth_step.tolist() == [0, 0, 0]


def test_iterated_counts_k3():
    k3 = named_seed("k3")
    res = corona_graph(k3, 2)
    assert res.graph.node_count == 48
    assert res.graph.edge_count == 93


@pytest.mark.parametrize("name", ["k2", "k3", "s3", "s4", "c4", "p4"])
def test_sweep_matches_closed_forms_and_bfs_oracle(name):
    seed = named_seed(name)
    for m in range(4):
        res = corona_graph(seed, m)
        assert res.graph.node_count == corona_node_count(seed.n, m)
        assert res.graph.edge_count == corona_edge_count(seed.n, seed.e0, m)
        want = seed.d0 + 2 * m
        if res.graph.node_count <= 400:
            assert bfs_diameter_oracle(res.graph) == want


def test_old_ids_are_a_stable_prefix():
    seed = named_seed("s4")
    prev = corona_graph(seed, 1)
    nxt = corona_graph(seed, 2)
    old_edges = {e for e in prev.graph.iter_edges()}
    new_edges = {e for e in nxt.graph.iter_edges()
                 if e[0] < prev.graph.node_count and e[1] < prev.graph.node_count}
    assert old_edges == new_edges
    assert nxt.birth_step[: prev.graph.node_count].tolist() == prev.birth_step.tolist()


def test_birth_parent_copy_bookkeeping():
    seed = named_seed("k2")
    res = corona_graph(seed, 2)
    # seed nodes, then 2 copies of 2 at step 1, then 6 copies of 2 at step 2
    assert res.birth_step.tolist() == [0, 0, 1, 1, 1, 1] + [2] * 12
    assert res.parent.tolist()[:6] == [-1, -1, 0, 0, 1, 1]
    assert res.copy_id.tolist()[:6] == [0, 0, 1, 1, 2, 2]


def test_size_cap_refusal_before_allocation():
    seed = named_seed("k3")
    with pytest.raises(SizeCapError, match="exceeds the cap"):
        corona_graph(seed, 20, size_cap=1_000_000)
