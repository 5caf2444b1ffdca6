import json
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sccg.graph import build_graph, named_seed
from sccg.metrics import (
    assortativity,
    avg_clustering,
    bfs_distances,
    compute_report,
    degree_ccdf,
    density,
    diameter_lower_bound,
    exact_diameter,
    fit_power_law_exponent,
    knn_curve,
    triangle_count,
    triangles_per_node,
)
from sccg.selfcoord import SccgParams, sccg_generate
from tests.conftest import (
    brute_force_triangles,
    floyd_warshall_diameter,
    random_simple_graph,
)


def complete(n):
    return build_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def star(n):
    return build_graph([(0, i) for i in range(1, n)], n)


def path(n):
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def test_density_examples():
    assert density(complete(4)) == 1.0
    assert math.isclose(density(path(3)), 2 * 2 / (3 * 2))
    assert density(build_graph([], 1)) is None


def test_exact_diameter_examples():
    assert exact_diameter(complete(4)) == 1
    assert exact_diameter(path(5)) == 4
    assert exact_diameter(named_seed("c8").graph) == 4
    disconnected = build_graph([(0, 1), (2, 3)], 4)
    assert exact_diameter(disconnected) is None
    assert exact_diameter(build_graph([], 1)) == 0


def test_diameter_matches_floyd_warshall_on_random_graphs(rng):
    for _ in range(25):
        g = random_simple_graph(rng, 60)
        assert exact_diameter(g) == floyd_warshall_diameter(g)


def test_bfs_distances_levels():
    g = path(6)
    d = bfs_distances(g, 0)
    assert d.tolist() == [0, 1, 2, 3, 4, 5]


def test_clustering_examples():
    assert avg_clustering(complete(4)) == 1.0
    assert avg_clustering(star(4)) == 0.0
    tri_pendant = build_graph([(0, 1), (0, 2), (1, 2), (2, 3)], 4)
    assert math.isclose(avg_clustering(tri_pendant), (1 + 1 + 1 / 3 + 0) / 4)
    # excluding low-degree nodes changes the average accordingly
    assert math.isclose(
        avg_clustering(tri_pendant, include_low_degree=False), (1 + 1 + 1 / 3) / 3
    )


def test_triangle_examples():
    assert triangle_count(complete(3)) == 1
    assert triangle_count(complete(4)) == 4
    assert triangle_count(star(6)) == 0
    g = named_seed("g12").graph
    assert triangle_count(g) == 1


def test_triangles_match_brute_force(rng):
    for _ in range(12):
        g = random_simple_graph(rng, 40)
        tri = triangles_per_node(g)
        assert int(tri.sum()) % 3 == 0
        assert int(tri.sum()) // 3 == brute_force_triangles(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_triangles_hypothesis_random(seed):
    g = random_simple_graph(random.Random(seed), 25)
    assert triangle_count(g) == brute_force_triangles(g)


def test_assortativity_star_is_minus_one():
    for n in (3, 5, 9):
        r = assortativity(star(n))
        assert r is not None
        assert abs(r - (-1.0)) <= 1e-12


def test_assortativity_undefined_for_regular_graphs():
    assert assortativity(complete(5)) is None
    assert assortativity(named_seed("c6").graph) is None
    assert assortativity(build_graph([], 3)) is None


def test_assortativity_invariant_under_relabeling(rng):
    g = random_simple_graph(rng, 30)
    r = assortativity(g)
    perm = list(range(g.node_count))
    rng.shuffle(perm)
    relabeled = build_graph([(perm[u], perm[v]) for u, v in g.iter_edges()], g.node_count)
    r2 = assortativity(relabeled)
    if r is None:
        assert r2 is None
    else:
        assert math.isclose(r, r2, abs_tol=1e-9)


def test_degree_ccdf_examples():
    assert degree_ccdf(complete(3)) == [(2, 3)]
    assert degree_ccdf(star(4)) == [(1, 4), (3, 1)]
    assert degree_ccdf(complete(3), restrict_to=[]) == []
    assert degree_ccdf(star(4), restrict_to=[0]) == [(3, 1)]


def test_fit_recovers_planted_exponent():
    ccdf = [(d, 10_000_000 // d) for d in (2, 4, 8, 16, 32, 64)]
    gamma = fit_power_law_exponent(ccdf)
    assert gamma is not None
    assert abs(gamma - 2.0) <= 1e-6


def test_fit_requires_three_points():
    assert fit_power_law_exponent([(2, 10), (4, 1)]) is None
    assert fit_power_law_exponent([]) is None


def test_knn_examples():
    assert knn_curve(complete(4)) == {3: 3.0}
    assert knn_curve(star(4)) == {1: 3.0, 3: 1.0}


def test_density_of_corona_family_matches_closed_forms_and_decreases():
    from sccg.corona import corona_edge_count, corona_graph, corona_node_count

    seed = named_seed("k3")
    previous = 1.1
    for m in range(5):
        g = corona_graph(seed, m).graph
        v = corona_node_count(3, m)
        e = corona_edge_count(3, 3, m)
        assert density(g) == 2 * e / (v * (v - 1))
        assert density(g) < previous
        previous = density(g)


def test_hub_ccdf_floor_counts_every_hub():
    r = sccg_generate(SccgParams(seed=named_seed("k3"), steps=4))
    hubs = r.hubs()
    assert len(hubs) == sum(3 ** (i - 1) for i in range(1, 5)) == 40
    ccdf = degree_ccdf(r.graph, hubs)
    assert ccdf[0][1] == 40  # the smallest hub degree cumulates all hubs


def test_knn_nonincreasing_over_hub_range():
    r = sccg_generate(SccgParams(seed=named_seed("k3"), steps=4))
    curve = knn_curve(r.graph)
    hub_degrees = sorted(r.graph.degree(h) for h in r.hubs())
    values = [curve[d] for d in hub_degrees]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_report_selection_and_json_stability():
    g = complete(4)
    rep = compute_report(g, metrics=["density", "triangles"])
    assert rep.density == 1.0
    assert rep.triangle_count == 4
    assert rep.diameter is None and rep.diameter_method is None
    full = compute_report(g)
    doc = full.to_json_dict()
    assert list(doc) == [
        "node_count", "edge_count", "density", "density_undefined",
        "diameter", "diameter_unreachable", "diameter_method",
        "avg_clustering", "triangle_count",
        "assortativity_r", "assortativity_undefined",
        "degree_histogram", "fitted_gamma", "gamma_from_hubs", "knn_curve",
    ]
    assert json.dumps(doc) == json.dumps(full.to_json_dict())
    with pytest.raises(ValueError, match="unknown metrics"):
        compute_report(g, metrics=["density", "bogus"])


def test_report_flags_for_undefined_metrics():
    rep = compute_report(complete(5))
    assert rep.assortativity_undefined and rep.assortativity_r is None
    rep = compute_report(build_graph([(0, 1), (2, 3)], 4))
    assert rep.diameter_unreachable and rep.diameter is None


def test_hub_restricted_gamma_in_report():
    r = sccg_generate(SccgParams(seed=named_seed("k3"), steps=4))
    rep = compute_report(r.graph, hubs=r.hubs(), metrics=["gamma"])
    assert rep.gamma_from_hubs
    assert rep.fitted_gamma is not None


def test_sampled_diameter_is_a_labeled_lower_bound():
    g = named_seed("c9").graph
    exact = exact_diameter(g)
    lb = diameter_lower_bound(g, sources=3)
    assert lb is not None and lb <= exact
    # the report only switches to sampling above the size threshold
    rep = compute_report(g, metrics=["diameter"], sample=True)
    assert rep.diameter_method == "exact"
    assert rep.diameter == exact
