"""Compact simple undirected graphs with per-node metadata.

The graph is stored in CSR form (``indptr``/``indices``) with neighbor lists
sorted ascending. Node ids are dense integers ``0..N-1`` assigned in creation
order, and neighbor iteration order is part of the deterministic contract:
every generator in this package emits bit-identical graphs for identical
parameters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

DEFAULT_SIZE_CAP = 10_000_000


class SizeCapError(ValueError):
    """Predicted output size exceeds the configured node cap."""


class NodeClass(str, Enum):
    SKELETAL = "skeletal"
    OFFSHOOT = "offshoot"


class Role(str, Enum):
    HUB = "hub"
    NON_HUB = "non-hub"
    SIMPLE = "simple"


class Graph:
    """Immutable simple undirected graph (no loops, no parallel edges)."""

    __slots__ = ("indptr", "indices", "node_count", "edge_count", "_degrees")

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        self.indptr = indptr
        self.indices = indices
        self.node_count = int(len(indptr) - 1)
        self.edge_count = int(len(indices) // 2)
        self._degrees: np.ndarray | None = None

    @property
    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            self._degrees = np.diff(self.indptr)
        return self._degrees

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges as parallel arrays (u, v) with u < v, sorted."""
        rows = np.repeat(np.arange(self.node_count, dtype=self.indices.dtype), self.degrees)
        mask = rows < self.indices
        return rows[mask], self.indices[mask]

    def iter_edges(self) -> Iterable[tuple[int, int]]:
        us, vs = self.edge_arrays()
        return zip(us.tolist(), vs.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.node_count == other.node_count
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:  # identity semantics would surprise given __eq__
        return hash((self.node_count, self.indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def _csr_from_sym_arrays(row: np.ndarray, col: np.ndarray, node_count: int) -> Graph:
    """Build CSR from pre-symmetrized, duplicate-free (row, col) pairs."""
    order = np.lexsort((col, row))
    row = row[order]
    col = col[order]
    counts = np.bincount(row, minlength=node_count)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return Graph(indptr, col.astype(np.int64, copy=False))


def build_graph(edges: Iterable[tuple[int, int]], node_count: int) -> Graph:
    """Build a simple graph from unordered node-id pairs.

    Duplicate pairs collapse to a single edge. Self-loops or ids outside
    ``0..node_count-1`` are rejected.
    """
    if node_count < 0:
        raise ValueError("node_count must be non-negative")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop ({u},{u}) not allowed in a simple graph")
        if not (0 <= u < node_count and 0 <= v < node_count):
            raise ValueError(f"edge ({u},{v}) references a node id outside 0..{node_count - 1}")
        seen.add((u, v) if u < v else (v, u))
    if not seen:
        indptr = np.zeros(node_count + 1, dtype=np.int64)
        return Graph(indptr, np.empty(0, dtype=np.int64))
    us = np.fromiter((e[0] for e in seen), dtype=np.int64, count=len(seen))
    vs = np.fromiter((e[1] for e in seen), dtype=np.int64, count=len(seen))
    return _csr_from_sym_arrays(
        np.concatenate([us, vs]), np.concatenate([vs, us]), node_count
    )


def graph_from_adjacency_sets(adj: Sequence[set[int]]) -> Graph:
    """Finalize a builder adjacency (list of neighbor sets) into a Graph."""
    n = len(adj)
    indptr = np.zeros(n + 1, dtype=np.int64)
    degs = np.fromiter((len(s) for s in adj), dtype=np.int64, count=n)
    np.cumsum(degs, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=np.int64)
    for v, s in enumerate(adj):
        indices[indptr[v] : indptr[v + 1]] = sorted(s)
    return Graph(indptr, indices)


@dataclass
class NodeMeta:
    """Per-node provenance record filled in by the generators."""

    birth_step: int
    node_class: NodeClass
    role: Role
    corona_parent: int | None
    copy_id: int
    ancestor_hubs: tuple[int, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class SeedGraph:
    """Validated seed graph with its derived constants."""

    graph: Graph
    n: int
    e0: int
    d0: int
    k0_max: int
    name: str | None = None

    @classmethod
    def from_graph(cls, graph: Graph, name: str | None = None) -> "SeedGraph":
        if graph.node_count < 2:
            raise ValueError("seed graph needs at least 2 nodes")
        d0 = _small_graph_diameter(graph)
        if d0 is None:
            raise ValueError("seed graph must be connected")
        return cls(
            graph=graph,
            n=graph.node_count,
            e0=graph.edge_count,
            d0=d0,
            k0_max=int(graph.degrees.max()),
            name=name,
        )


def _small_graph_diameter(graph: Graph) -> int | None:
    """All-pairs BFS diameter for small graphs; None if disconnected."""
    n = graph.node_count
    best = 0
    for src in range(n):
        dist = {src: 0}
        q = deque([src])
        while q:
            u = q.popleft()
            for w in graph.neighbors(u).tolist():
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if len(dist) != n:
            return None
        best = max(best, max(dist.values()))
    return best


# Small seed graphs used as corona motifs, beyond the parametric families.
# These are the five-node graphlets from the standard 30-graphlet catalog
# that are referenced by name.
_GRAPHLETS: dict[str, list[tuple[int, int]]] = {
    # claw with one subdivided edge ("fork")
    "g10": [(0, 1), (1, 2), (2, 3), (2, 4)],
    # triangle with two pendant edges on distinct vertices ("bull")
    "g12": [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)],
    # triangle with a two-edge tail ("tadpole")
    "g13": [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)],
    # triangle with two pendant edges on one vertex ("cricket")
    "g14": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)],
    # four-cycle with a pendant edge ("banner")
    "g16": [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)],
}

# Family minimums: k2 is the smallest clique seed, stars need a center plus
# two leaves, c3 would alias k3 and is refused, paths start at p2.
_FAMILY_MIN = {"k": 2, "s": 3, "c": 4, "p": 2}


def _family_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family == "k":
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    if family == "s":
        return [(0, i) for i in range(1, n)]
    if family == "c":
        return [(i, (i + 1) % n) for i in range(n)]
    if family == "p":
        return [(i, i + 1) for i in range(n - 1)]
    raise ValueError(f"unknown seed family {family!r}")


def named_seed(name: str) -> SeedGraph:
    """Resolve a seed name (k<n>, s<n>, c<n>, p<n>, or g10/g12/g13/g14/g16)."""
    key = name.strip().lower()
    if key in _GRAPHLETS:
        edges = _GRAPHLETS[key]
        return SeedGraph.from_graph(build_graph(edges, 5), name=key)
    family, digits = key[:1], key[1:]
    if family not in _FAMILY_MIN or not digits.isdigit():
        raise ValueError(f"unknown seed name {name!r}")
    n = int(digits)
    if n < _FAMILY_MIN[family]:
        raise ValueError(
            f"seed {name!r} is below the family minimum "
            f"({family}{_FAMILY_MIN[family]})"
        )
    return SeedGraph.from_graph(build_graph(_family_edges(family, n), n), name=key)
