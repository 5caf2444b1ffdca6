"""Exact and statistical graph analytics.

Everything here is a pure function of an immutable :class:`~sccg.graph.Graph`.
Diameters are exact (all-pairs BFS pruned with the iFUB eccentricity bound)
unless the caller explicitly requests the sampled lower bound for very large
graphs. Undefined metrics come back as ``None`` with an explicit flag in the
report, never as a silent zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph

SAMPLE_THRESHOLD = 100_000
_SAMPLE_SOURCES = 128


def density(g: Graph) -> float | None:
    """Edge density 2|E| / (|V| (|V|-1)); None for fewer than 2 nodes."""
    n = g.node_count
    if n < 2:
        return None
    return 2.0 * g.edge_count / (n * (n - 1))


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from ``source``; -1 marks unreachable nodes."""
    n = g.node_count
    dist = np.full(n, -1, dtype=np.int64)
    frontier = np.array([source], dtype=np.int64)
    d = 0
    indptr, indices = g.indptr, g.indices
    while frontier.size:
        dist[frontier] = d
        starts = indptr[frontier]
        lens = indptr[frontier + 1] - starts
        total = int(lens.sum())
        if not total:
            break
        prefix = np.zeros(len(lens), dtype=np.int64)
        np.cumsum(lens[:-1], out=prefix[1:])
        idx = np.arange(total, dtype=np.int64) - np.repeat(prefix, lens) + np.repeat(starts, lens)
        nbrs = indices[idx]
        fresh = nbrs[dist[nbrs] < 0]
        frontier = np.unique(fresh)
        d += 1
    return dist


def is_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return True
    return bool((bfs_distances(g, 0) >= 0).all())


def exact_diameter(g: Graph) -> int | None:
    """Exact diameter by BFS eccentricities; None when disconnected.

    Uses the iFUB pruning: run BFS from a max-degree root, then sweep the
    BFS levels from the deepest inward, keeping a lower bound from observed
    eccentricities and stopping once no deeper level can beat it. This never
    approximates; it only skips BFS runs the bound proves unnecessary.
    """
    n = g.node_count
    if n == 0:
        return None
    if n == 1:
        return 0
    root = int(np.argmax(g.degrees))
    dist_root = bfs_distances(g, root)
    if (dist_root < 0).any():
        return None
    ecc_root = int(dist_root.max())
    lb = ecc_root
    level = ecc_root
    while level > 0 and lb < 2 * level:
        for u in np.flatnonzero(dist_root == level).tolist():
            ecc_u = int(bfs_distances(g, u).max())
            if ecc_u > lb:
                lb = ecc_u
        if lb >= 2 * (level - 1):
            break
        level -= 1
    return lb


def diameter_lower_bound(g: Graph, sources: int = _SAMPLE_SOURCES) -> int | None:
    """Max BFS eccentricity over a deterministic degree-stratified sample."""
    n = g.node_count
    if n == 0:
        return None
    if n == 1:
        return 0
    order = np.lexsort((np.arange(n), g.degrees))
    take = min(sources, n)
    picks = order[np.linspace(0, n - 1, take).astype(np.int64)]
    best = 0
    for src in np.unique(picks).tolist():
        dist = bfs_distances(g, src)
        if (dist < 0).any():
            return None
        best = max(best, int(dist.max()))
    return best


def triangles_per_node(g: Graph) -> np.ndarray:
    """Per-node triangle participation via degree-ordered neighbor merging."""
    n = g.node_count
    tri = np.zeros(n, dtype=np.int64)
    if n == 0 or g.edge_count == 0:
        return tri
    rank = np.empty(n, dtype=np.int64)
    rank[np.lexsort((np.arange(n), g.degrees))] = np.arange(n)
    # forward adjacency: per node, neighbors of higher rank, sorted by rank
    fwd: list[np.ndarray] = []
    for u in range(n):
        nbrs = g.neighbors(u)
        higher = nbrs[rank[nbrs] > rank[u]]
        fwd.append(higher[np.argsort(rank[higher], kind="stable")])
    by_rank = np.argsort(rank, kind="stable")
    for u in by_rank.tolist():
        fu = fwd[u]
        if fu.size < 1:
            continue
        ranks_fu = rank[fu]
        for v in fu.tolist():
            fv = fwd[v]
            if fv.size:
                common = fu[np.isin(ranks_fu, rank[fv], assume_unique=True)]
                if common.size:
                    tri[u] += common.size
                    tri[v] += common.size
                    np.add.at(tri, common, 1)
    return tri


def triangle_count(g: Graph) -> int:
    """Number of distinct 3-cliques."""
    return int(triangles_per_node(g).sum()) // 3


def avg_clustering(g: Graph, include_low_degree: bool = True) -> float:
    """Mean local clustering coefficient.

    Nodes with degree below 2 contribute 0 when ``include_low_degree`` is
    set (the convention used throughout this package) and are dropped from
    the average otherwise.
    """
    n = g.node_count
    if n == 0:
        return 0.0
    deg = g.degrees.astype(np.float64)
    tri = triangles_per_node(g).astype(np.float64)
    eligible = deg >= 2
    coeff = np.zeros(n, dtype=np.float64)
    coeff[eligible] = 2.0 * tri[eligible] / (deg[eligible] * (deg[eligible] - 1.0))
    if include_low_degree:
        return float(coeff.mean())
    if not eligible.any():
        return 0.0
    return float(coeff[eligible].mean())


def assortativity(g: Graph) -> float | None:
    """Degree assortativity: Pearson correlation of degrees across edges.

    This is the standard Newman correlation coefficient over the multiset of
    directed edge endpoints. Returns None (undefined) when the graph has no
    edges or the endpoint degrees carry no variance (regular graphs).
    """
    if g.edge_count == 0:
        return None
    deg = g.degrees.astype(np.float64)
    x = np.repeat(deg, g.degrees)
    y = deg[g.indices]
    if np.all(x == x[0]) or np.all(y == y[0]):
        return None
    mx = x.mean()
    my = y.mean()
    cov = ((x - mx) * (y - my)).mean()
    sx = np.sqrt(((x - mx) ** 2).mean())
    sy = np.sqrt(((y - my) ** 2).mean())
    return float(cov / (sx * sy))


def degree_histogram(g: Graph) -> dict[int, int]:
    values, counts = np.unique(g.degrees, return_counts=True)
    return {int(d): int(c) for d, c in zip(values, counts)}


def degree_ccdf(
    g: Graph, restrict_to: Iterable[int] | None = None
) -> list[tuple[int, int]]:
    """Complementary cumulative degree counts, ascending by degree.

    Each pair (d, c) says c nodes have degree >= d. ``restrict_to`` narrows
    the population to a node subset (e.g. trace-identified hubs).
    """
    if restrict_to is None:
        degs = g.degrees
    else:
        ids = np.asarray(sorted(set(int(v) for v in restrict_to)), dtype=np.int64)
        if ids.size == 0:
            return []
        degs = g.degrees[ids]
    values, counts = np.unique(degs, return_counts=True)
    cum = counts[::-1].cumsum()[::-1]
    return [(int(d), int(c)) for d, c in zip(values, cum)]


def fit_power_law_exponent(ccdf: Sequence[tuple[int, int]]) -> float | None:
    """Exponent gamma from a least-squares fit of the log-log CCDF.

    The CCDF of a pure power law with exponent gamma has log-log slope
    1 - gamma, so gamma = 1 - slope. Needs at least 3 usable points.
    """
    pts = [(d, c) for d, c in ccdf if d > 0 and c > 0]
    if len(pts) < 3:
        return None
    logd = np.log([p[0] for p in pts])
    logc = np.log([p[1] for p in pts])
    slope = np.polyfit(logd, logc, 1)[0]
    return float(1.0 - slope)


def knn_curve(g: Graph) -> dict[int, float]:
    """Mean neighbor degree per degree class."""
    n = g.node_count
    if n == 0 or g.edge_count == 0:
        return {}
    deg = g.degrees
    nbr_deg_sums = np.zeros(n, dtype=np.float64)
    np.add.at(nbr_deg_sums, np.repeat(np.arange(n), deg), deg[g.indices].astype(np.float64))
    curve: dict[int, float] = {}
    positive = deg > 0
    knn_node = np.zeros(n, dtype=np.float64)
    knn_node[positive] = nbr_deg_sums[positive] / deg[positive]
    for d in np.unique(deg[positive]).tolist():
        sel = deg == d
        curve[int(d)] = float(knn_node[sel].mean())
    return curve


ALL_METRICS = (
    "density",
    "diameter",
    "clustering",
    "triangles",
    "assortativity",
    "degrees",
    "gamma",
    "knn",
)


@dataclass
class MetricsReport:
    """Analytics bundle; ``None`` plus a flag marks an undefined metric."""

    node_count: int
    edge_count: int
    density: float | None = None
    density_undefined: bool = False
    diameter: int | None = None
    diameter_unreachable: bool = False
    diameter_method: str | None = None  # "exact" or "sampled_lower_bound"
    avg_clustering: float | None = None
    triangle_count: int | None = None
    assortativity_r: float | None = None
    assortativity_undefined: bool = False
    degree_histogram: dict[int, int] = field(default_factory=dict)
    fitted_gamma: float | None = None
    gamma_from_hubs: bool = False
    knn_curve: dict[int, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "density": self.density,
            "density_undefined": self.density_undefined,
            "diameter": self.diameter,
            "diameter_unreachable": self.diameter_unreachable,
            "diameter_method": self.diameter_method,
            "avg_clustering": self.avg_clustering,
            "triangle_count": self.triangle_count,
            "assortativity_r": self.assortativity_r,
            "assortativity_undefined": self.assortativity_undefined,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "fitted_gamma": self.fitted_gamma,
            "gamma_from_hubs": self.gamma_from_hubs,
            "knn_curve": {str(k): v for k, v in sorted(self.knn_curve.items())},
        }


def compute_report(
    g: Graph,
    hubs: Iterable[int] | None = None,
    metrics: Iterable[str] | None = None,
    sample: bool = False,
    include_low_degree_clustering: bool = True,
) -> MetricsReport:
    """Compute the selected metrics (all by default) on one graph.

    ``hubs`` restricts the power-law fit to those nodes. With ``sample``
    set, graphs above ``SAMPLE_THRESHOLD`` nodes report a clearly labeled
    BFS-sample diameter lower bound instead of the exact value.
    """
    chosen = set(ALL_METRICS if metrics is None else metrics)
    unknown = chosen - set(ALL_METRICS)
    if unknown:
        raise ValueError(f"unknown metrics: {', '.join(sorted(unknown))}")
    report = MetricsReport(node_count=g.node_count, edge_count=g.edge_count)
    if "density" in chosen:
        report.density = density(g)
        report.density_undefined = report.density is None
    if "diameter" in chosen:
        if sample and g.node_count > SAMPLE_THRESHOLD:
            report.diameter = diameter_lower_bound(g)
            report.diameter_method = "sampled_lower_bound"
        else:
            report.diameter = exact_diameter(g)
            report.diameter_method = "exact"
        report.diameter_unreachable = report.diameter is None
    if "clustering" in chosen:
        report.avg_clustering = avg_clustering(g, include_low_degree_clustering)
    if "triangles" in chosen:
        report.triangle_count = triangle_count(g)
    if "assortativity" in chosen:
        report.assortativity_r = assortativity(g)
        report.assortativity_undefined = report.assortativity_r is None
    if "degrees" in chosen:
        report.degree_histogram = degree_histogram(g)
    if "gamma" in chosen:
        if hubs is not None:
            report.fitted_gamma = fit_power_law_exponent(degree_ccdf(g, hubs))
            report.gamma_from_hubs = True
        else:
            report.fitted_gamma = fit_power_law_exponent(degree_ccdf(g))
    if "knn" in chosen:
        report.knn_curve = knn_curve(g)
    return report
