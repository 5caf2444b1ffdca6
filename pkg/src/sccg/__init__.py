"""Deterministic network generators and analytics.

Self-coordinated corona graphs with plain corona graphs and the standard
comparison models (Barabási-Albert, pseudofractal, Kronecker), plus an exact
graph-metrics engine and a CLI.
"""

__version__ = "0.1.0"

from .graph import (
    DEFAULT_SIZE_CAP,
    Graph,
    NodeClass,
    NodeMeta,
    Role,
    SeedGraph,
    SizeCapError,
    build_graph,
    named_seed,
)
from .corona import (
    CoronaResult,
    corona_diameter,
    corona_edge_count,
    corona_graph,
    corona_node_count,
    corona_nodes_added_at_step,
    corona_product,
)
from .selfcoord import (
    HubPolicy,
    HubRecord,
    SccgParams,
    SccgResult,
    TraceStep,
    analytic_gamma,
    cumulative_hub_frequency,
    hub_degree_interval,
    predicted_hub_degree,
    predicted_top_hub_degree,
    sccg_generate,
)
from .baselines import (
    BaParams,
    ba_generate,
    kronecker_generate,
    pfsf_generate,
    pfsf_node_count,
)
from .metrics import (
    MetricsReport,
    assortativity,
    avg_clustering,
    compute_report,
    degree_ccdf,
    density,
    exact_diameter,
    fit_power_law_exponent,
    knn_curve,
    triangle_count,
)

__all__ = [
    "DEFAULT_SIZE_CAP",
    "Graph",
    "NodeClass",
    "NodeMeta",
    "Role",
    "SeedGraph",
    "SizeCapError",
    "build_graph",
    "named_seed",
    "CoronaResult",
    "corona_diameter",
    "corona_edge_count",
    "corona_graph",
    "corona_node_count",
    "corona_nodes_added_at_step",
    "corona_product",
    "HubPolicy",
    "HubRecord",
    "SccgParams",
    "SccgResult",
    "TraceStep",
    "analytic_gamma",
    "cumulative_hub_frequency",
    "hub_degree_interval",
    "predicted_hub_degree",
    "predicted_top_hub_degree",
    "sccg_generate",
    "BaParams",
    "ba_generate",
    "kronecker_generate",
    "pfsf_generate",
    "pfsf_node_count",
    "MetricsReport",
    "assortativity",
    "avg_clustering",
    "compute_report",
    "degree_ccdf",
    "density",
    "exact_diameter",
    "fit_power_law_exponent",
    "knn_curve",
    "triangle_count",
]
