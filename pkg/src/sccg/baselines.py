"""Comparison-model generators: Barabási-Albert, pseudofractal, Kronecker."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DEFAULT_SIZE_CAP, Graph, SizeCapError, build_graph, graph_from_adjacency_sets

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Portable 64-bit PRNG (splitmix64).

    state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
    output z ^ (z >> 31). All arithmetic mod 2^64.

    ``below(n)`` maps the 64-bit output to [0, n) by the multiply-shift
    (x * n) >> 64, so streams reproduce across languages.
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return (self.next_u64() * n) >> 64


@dataclass(frozen=True)
class BaParams:
    initial_nodes: int
    links_per_new_node: int
    target_nodes: int
    rng_seed: int

    def __post_init__(self) -> None:
        if self.initial_nodes < 1:
            raise ValueError("initial_nodes must be at least 1")
        if self.links_per_new_node < 1:
            raise ValueError("links_per_new_node must be at least 1")
        if self.links_per_new_node > self.initial_nodes:
            raise ValueError("links_per_new_node cannot exceed initial_nodes")
        if self.target_nodes < self.initial_nodes:
            raise ValueError("target_nodes must be at least initial_nodes")


def ba_generate(params: BaParams) -> Graph:
    """Grow a preferential-attachment graph from a complete initial graph.

    Each arriving node attaches to ``links_per_new_node`` distinct existing
    nodes sampled proportionally to degree (uniform draws from the multiset
    of edge endpoints, duplicates redrawn within the batch). Output is fully
    determined by ``rng_seed``.
    """
    m0 = params.initial_nodes
    m = params.links_per_new_node
    rng = SplitMix64(params.rng_seed)
    adj: list[set[int]] = [set() for _ in range(params.target_nodes)]
    endpoints: list[int] = []
    for i in range(m0):
        for j in range(i + 1, m0):
            adj[i].add(j)
            adj[j].add(i)
            endpoints.append(i)
            endpoints.append(j)
    for v in range(m0, params.target_nodes):
        targets: set[int] = set()
        while len(targets) < m:
            if endpoints:
                t = endpoints[rng.below(len(endpoints))]
            else:  # degenerate start: a single node has no endpoints yet
                t = rng.below(v)
            if t not in targets:
                targets.add(t)
        for t in sorted(targets):
            adj[v].add(t)
            adj[t].add(v)
            endpoints.append(v)
            endpoints.append(t)
    return graph_from_adjacency_sets(adj)


def pfsf_generate(t: int, size_cap: int = DEFAULT_SIZE_CAP) -> Graph:
    """Deterministic pseudofractal scale-free graph.

    Starts from a single edge one step before t = 0; at every step each
    existing edge spawns a new node joined to both of its endpoints, so
    edges triple each step: E(t) = 3^(t+1) and N(t) = N(t-1) + E(t-1).
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    nodes = pfsf_node_count(t)
    if nodes > size_cap:
        raise SizeCapError(f"predicted node count {nodes} exceeds the cap of {size_cap}")
    edges: list[tuple[int, int]] = [(0, 1)]
    n = 2
    for _ in range(t + 1):
        new_edges = []
        for u, v in edges:
            w = n
            n += 1
            new_edges.append((u, w))
            new_edges.append((v, w))
        edges.extend(new_edges)
    return build_graph(edges, n)


def pfsf_node_count(t: int) -> int:
    """Closed form N(t) = (3^(t+1) + 3) / 2 for the pseudofractal graph."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return (3 ** (t + 1) + 3) // 2


def parse_kronecker_seed(text: str) -> np.ndarray:
    """Parse the small seed-matrix format: a dimension line, then 0/1 rows."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty seed matrix")
    try:
        dim = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"bad dimension line {lines[0]!r}") from exc
    rows = lines[1:]
    if len(rows) != dim:
        raise ValueError(f"expected {dim} matrix rows, found {len(rows)}")
    mat = np.zeros((dim, dim), dtype=np.int8)
    for i, row in enumerate(rows):
        digits = row.replace(" ", "")
        if len(digits) != dim or any(c not in "01" for c in digits):
            raise ValueError(f"matrix row {i + 1} must be {dim} binary digits")
        mat[i] = [int(c) for c in digits]
    return mat


def kronecker_generate(
    seed_adjacency: np.ndarray, k: int, size_cap: int = DEFAULT_SIZE_CAP
) -> Graph:
    """Graph of the k-th Kronecker power of a 0/1 seed matrix.

    The seed must be square, symmetric, and carry a self-loop on every node
    (all-ones diagonal); self-loops present in the matrix power are dropped
    from the emitted simple graph.
    """
    seed = np.asarray(seed_adjacency)
    if k < 1:
        raise ValueError("k must be at least 1")
    if seed.ndim != 2 or seed.shape[0] != seed.shape[1]:
        raise ValueError("seed matrix must be square")
    if not np.isin(seed, (0, 1)).all():
        raise ValueError("seed matrix entries must be 0 or 1")
    if not (np.diag(seed) == 1).all():
        raise ValueError("seed matrix must have a self-loop on every node")
    if not np.array_equal(seed, seed.T):
        raise ValueError("seed matrix must be symmetric")
    dim = seed.shape[0]
    nodes = dim**k
    if nodes > size_cap:
        raise SizeCapError(f"predicted node count {nodes} exceeds the cap of {size_cap}")
    su, sv = np.nonzero(seed)  # directed pairs, loops included
    pu = np.zeros(1, dtype=np.int64)
    pv = np.zeros(1, dtype=np.int64)
    for _ in range(k):
        pu = (pu[:, None] * dim + su[None, :]).ravel()
        pv = (pv[:, None] * dim + sv[None, :]).ravel()
    keep = pu < pv  # one orientation, loops dropped
    return build_graph(zip(pu[keep].tolist(), pv[keep].tolist()), nodes)


def seed_matrix_with_loops(graph: Graph) -> np.ndarray:
    """Adjacency matrix of a small graph with self-loops added."""
    n = graph.node_count
    mat = np.eye(n, dtype=np.int8)
    for u, v in graph.iter_edges():
        mat[u, v] = 1
        mat[v, u] = 1
    return mat
