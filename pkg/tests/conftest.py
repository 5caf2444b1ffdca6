"""Shared oracles for the test suite.

These deliberately reimplement the checked quantities with different
algorithms than the package uses (Floyd-Warshall instead of BFS, triple
enumeration instead of neighbor merging, dict-based corona assembly instead
of array assembly) so each comparison is a genuine cross-check.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

import numpy as np
import pytest

from sccg.graph import Graph, build_graph


def floyd_warshall_diameter(g: Graph) -> int | None:
    """Exact diameter via dense min-plus relaxation; None if disconnected."""
    n = g.node_count
    if n == 0:
        return None
    if n == 1:
        return 0
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for u, v in g.iter_edges():
        dist[u, v] = 1.0
        dist[v, u] = 1.0
    for k in range(n):
        np.minimum(dist, dist[:, k, None] + dist[None, k, :], out=dist)
    if np.isinf(dist).any():
        return None
    return int(dist.max())


def brute_force_triangles(g: Graph) -> int:
    """Count 3-cliques by checking every node triple."""
    adj = [set(g.neighbors(v).tolist()) for v in range(g.node_count)]
    count = 0
    for u, v, w in combinations(range(g.node_count), 3):
        if v in adj[u] and w in adj[u] and w in adj[v]:
            count += 1
    return count


def bfs_diameter_oracle(g: Graph) -> int | None:
    """All-pairs BFS with plain dict/deque bookkeeping."""
    n = g.node_count
    best = 0
    for src in range(n):
        seen = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            for w in g.neighbors(u).tolist():
                if w not in seen:
                    seen[w] = seen[u] + 1
                    q.append(w)
        if len(seen) != n:
            return None
        best = max(best, max(seen.values()))
    return best


def naive_corona_edges(g_edges: set, g_n: int, h_edges: set, h_n: int):
    """Corona product by direct definition, as (edge set, node count)."""
    edges = set(g_edges)
    n = g_n
    for p in range(g_n):
        base = n
        offset = {i: base + i for i in range(h_n)}
        for a, b in h_edges:
            edges.add((min(offset[a], offset[b]), max(offset[a], offset[b])))
        for i in range(h_n):
            edges.add((p, offset[i]))
        n += h_n
    return edges, n


def random_simple_graph(rng: random.Random, max_nodes: int) -> Graph:
    n = rng.randint(3, max_nodes)
    p = rng.choice([0.03, 0.08, 0.15, 0.3])
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(edges, n)


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(20240817)
