"""Corona product of graphs and iterated corona-graph generation.

The corona product G ∘ H takes G plus one fresh copy of H per node of G and
joins the i-th node of G to every node of the i-th copy. Iterating the
product against a fixed seed gives the plain corona graph family, whose node
count, edge count and diameter follow closed forms implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DEFAULT_SIZE_CAP, Graph, SeedGraph, SizeCapError, _csr_from_sym_arrays


def corona_node_count(n: int, m: int) -> int:
    """Nodes of the m-th corona graph over an n-node seed: n(n+1)^m."""
    if n < 1:
        raise ValueError("seed size must be at least 1")
    if m < 0:
        raise ValueError("step count must be non-negative")
    return n * (n + 1) ** m


def corona_nodes_added_at_step(n: int, i: int) -> int:
    """Nodes the i-th corona product appends: n^2 (n+1)^(i-1)."""
    if i < 1:
        raise ValueError("step index must be at least 1")
    return n * n * (n + 1) ** (i - 1)


def corona_edge_count(n: int, e0: int, m: int) -> int:
    """Edges of the m-th corona graph: e0 + (e0 + n)((n+1)^m - 1)."""
    if n < 1 or e0 < 0 or m < 0:
        raise ValueError("invalid seed constants")
    return e0 + (e0 + n) * ((n + 1) ** m - 1)


def corona_diameter(d0: int, m: int) -> int:
    """Diameter of the m-th corona graph over a connected seed: d0 + 2m."""
    if d0 < 1:
        raise ValueError("seed diameter must be at least 1")
    if m < 0:
        raise ValueError("step count must be non-negative")
    return d0 + 2 * m


def corona_product(g: Graph, h: SeedGraph) -> tuple[Graph, np.ndarray]:
    """One corona product G ∘ H.

    Returns the product graph and a parent map: ``parent[v] == -1`` for the
    nodes of ``g`` (which keep their ids) and the attachment node of ``g``
    for every copy node. Copies are appended in ascending order of parent id
    and keep the seed's internal node order.
    """
    if g.node_count < 1:
        raise ValueError("left operand must be non-empty")
    ng = g.node_count
    nh = h.n
    total = ng * (1 + nh)
    parent = np.full(total, -1, dtype=np.int64)

    hu, hv = h.graph.edge_arrays()
    gu, gv = g.edge_arrays()
    us = [gu]
    vs = [gv]
    for p in range(ng):
        base = ng + p * nh
        parent[base : base + nh] = p
        us.append(hu + base)
        vs.append(hv + base)
        us.append(np.full(nh, p, dtype=np.int64))
        vs.append(np.arange(base, base + nh, dtype=np.int64))
    u = np.concatenate(us)
    v = np.concatenate(vs)
    graph = _csr_from_sym_arrays(
        np.concatenate([u, v]), np.concatenate([v, u]), total
    )
    return graph, parent


@dataclass
class CoronaResult:
    """Iterated corona graph plus per-node provenance arrays."""

    graph: Graph
    birth_step: np.ndarray
    parent: np.ndarray  # -1 for seed nodes
    copy_id: np.ndarray  # seed nodes form copy 0


def corona_graph(seed: SeedGraph, m: int, size_cap: int = DEFAULT_SIZE_CAP) -> CoronaResult:
    """Generate the plain corona graph after m product steps."""
    if m < 0:
        raise ValueError("step count must be non-negative")
    predicted = corona_node_count(seed.n, m)
    if predicted > size_cap:
        raise SizeCapError(
            f"predicted node count {predicted} exceeds the cap of {size_cap}"
        )
    n = seed.n
    hu, hv = seed.graph.edge_arrays()
    us = [hu]
    vs = [hv]
    birth = [np.zeros(n, dtype=np.int64)]
    parent = [np.full(n, -1, dtype=np.int64)]
    copy_id = [np.zeros(n, dtype=np.int64)]
    node_count = n
    next_copy = 1
    for step in range(1, m + 1):
        old = node_count
        added = old * n
        bases = old + np.arange(old, dtype=np.int64) * n
        # in-copy seed edges for every new copy at once
        us.append((bases[:, None] + hu[None, :]).ravel())
        vs.append((bases[:, None] + hv[None, :]).ravel())
        # attachment star from each parent to its copy
        us.append(np.repeat(np.arange(old, dtype=np.int64), n))
        vs.append(np.arange(old, old + added, dtype=np.int64))
        birth.append(np.full(added, step, dtype=np.int64))
        parent.append(np.repeat(np.arange(old, dtype=np.int64), n))
        copy_id.append(np.repeat(np.arange(next_copy, next_copy + old, dtype=np.int64), n))
        next_copy += old
        node_count += added
    u = np.concatenate(us)
    v = np.concatenate(vs)
    graph = _csr_from_sym_arrays(
        np.concatenate([u, v]), np.concatenate([v, u]), node_count
    )
    return CoronaResult(
        graph=graph,
        birth_step=np.concatenate(birth),
        parent=np.concatenate(parent),
        copy_id=np.concatenate(copy_id),
    )
