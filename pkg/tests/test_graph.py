import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sccg.graph import Graph, SeedGraph, build_graph, named_seed
from sccg.io import read_edge_list, write_edge_list


def test_build_triangle():
    g = build_graph([(0, 1), (1, 2), (0, 2)], 3)
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.neighbors(0).tolist() == [1, 2]


def test_build_isolated_node():
    g = build_graph([], 1)
    assert g.node_count == 1
    assert g.edge_count == 0


def test_build_duplicate_edge_collapses():
    g = build_graph([(0, 1), (0, 1), (1, 0)], 2)
    assert g.edge_count == 1


def test_build_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph([(1, 1)], 3)


def test_build_rejects_out_of_range():
    with pytest.raises(ValueError, match="outside"):
        build_graph([(0, 3)], 3)


def test_adjacency_symmetric_and_degree_sum():
    g = build_graph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], 4)
    for u in range(g.node_count):
        for v in g.neighbors(u).tolist():
            assert g.has_edge(v, u)
    assert int(g.degrees.sum()) == 2 * g.edge_count


def test_named_seed_k3():
    s = named_seed("k3")
    assert (s.n, s.e0, s.d0, s.k0_max) == (3, 3, 1, 2)


def test_named_seed_s3():
    s = named_seed("s3")
    assert (s.n, s.e0, s.d0, s.k0_max) == (3, 2, 2, 2)


def test_named_seed_c8():
    s = named_seed("c8")
    assert (s.n, s.e0, s.d0, s.k0_max) == (8, 8, 4, 2)


def test_named_seed_p4():
    s = named_seed("p4")
    assert (s.n, s.e0, s.d0, s.k0_max) == (4, 3, 3, 2)


@pytest.mark.parametrize("name,n,e0,d0", [
    ("g10", 5, 4, 3),
    ("g12", 5, 5, 3),
    ("g13", 5, 5, 3),
    ("g14", 5, 5, 2),
    ("g16", 5, 5, 3),
])
def test_named_graphlet_seeds(name, n, e0, d0):
    s = named_seed(name)
    assert (s.n, s.e0, s.d0) == (n, e0, d0)


def test_named_seed_rejects_unknown():
    with pytest.raises(ValueError, match="unknown seed"):
        named_seed("q7")
    with pytest.raises(ValueError, match="unknown seed"):
        named_seed("g11")


def test_named_seed_rejects_below_family_minimum():
    for bad in ("c3", "c2", "s2", "k1", "p1"):
        with pytest.raises(ValueError):
            named_seed(bad)


def test_seed_graph_requires_connected():
    g = build_graph([(0, 1)], 3)
    with pytest.raises(ValueError, match="connected"):
        SeedGraph.from_graph(g)


def test_bfs_reaches_whole_seed():
    # connectivity of every named seed implies BFS from any node covers it
    from sccg.metrics import bfs_distances

    for name in ("k4", "s5", "c6", "p4", "g12"):
        g = named_seed(name).graph
        for src in range(g.node_count):
            assert (bfs_distances(g, src) >= 0).all()


def test_bfs_reaches_exactly_the_component():
    from sccg.metrics import bfs_distances

    g = build_graph([(0, 1), (1, 2), (3, 4)], 6)
    reached = set(np.flatnonzero(bfs_distances(g, 0) >= 0).tolist())
    assert reached == {0, 1, 2}
    reached = set(np.flatnonzero(bfs_distances(g, 4) >= 0).tolist())
    assert reached == {3, 4}
    assert set(np.flatnonzero(bfs_distances(g, 5) >= 0).tolist()) == {5}


def test_edge_list_round_trip(tmp_path):
    g = named_seed("g16").graph
    path = tmp_path / "edges.txt"
    write_edge_list(g, path)
    back = read_edge_list(path)
    assert back == g


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_round_trip_random_graphs(tmp_path_factory, data):
    n = data.draw(st.integers(min_value=1, max_value=25))
    pairs = data.draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                lambda e: e[0] != e[1]
            ),
            max_size=60,
        )
    )
    g = build_graph(pairs, n)
    assert int(g.degrees.sum()) == 2 * g.edge_count
    path = tmp_path_factory.mktemp("rt") / "edges.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g
