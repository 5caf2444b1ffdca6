"""Self-coordinated corona graph (SCCG) generation.

Each step is a corona product against the fixed seed followed by a
self-coordination pass that adds edges only: the nodes that appeared in the
previous step elect a hub and a non-hub per first-time copy, and every new
node links to the elected hub of its lineage (or to the paired non-hub when
the hub link already exists) plus every hub in its inherited ancestor chain.
The whole construction is deterministic; hub ties break toward the lowest
node id, so runs reproduce byte-identically.

Alongside the generator sit the closed-form predictors for hub degrees, hub
frequencies and the power-law exponent of the hub degree distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .corona import corona_node_count
from .graph import (
    DEFAULT_SIZE_CAP,
    Graph,
    NodeClass,
    NodeMeta,
    Role,
    SeedGraph,
    SizeCapError,
    graph_from_adjacency_sets,
)

_HUB_TIEBREAKS = ("lowest_id",)
_NONHUB_RULES = ("lowest_id_nonhub",)
_DEEP_ATTACH = ("nearest_hub", "hub_nonhub_pair")


@dataclass(frozen=True)
class HubPolicy:
    """Canonical election and attachment rules.

    ``deep_attach`` controls nodes whose corona parent is an offshoot node:
    ``nearest_hub`` links them to the last hub of the inherited chain
    (falling back to its paired non-hub if the hub link already exists),
    ``hub_nonhub_pair`` links them to both members of that pair. The first
    is the default; the second exists for sensitivity checks.
    """

    hub_tiebreak: str = "lowest_id"
    nonhub_rule: str = "lowest_id_nonhub"
    deep_attach: str = "nearest_hub"

    def __post_init__(self) -> None:
        if self.hub_tiebreak not in _HUB_TIEBREAKS:
            raise ValueError(f"unknown hub tie-break {self.hub_tiebreak!r}")
        if self.nonhub_rule not in _NONHUB_RULES:
            raise ValueError(f"unknown non-hub rule {self.nonhub_rule!r}")
        if self.deep_attach not in _DEEP_ATTACH:
            raise ValueError(f"unknown deep attachment rule {self.deep_attach!r}")


@dataclass(frozen=True)
class SccgParams:
    seed: SeedGraph
    steps: int
    policy: HubPolicy = field(default_factory=HubPolicy)
    size_cap: int = DEFAULT_SIZE_CAP

    def __post_init__(self) -> None:
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        predicted = corona_node_count(self.seed.n, self.steps)
        if predicted > self.size_cap:
            raise SizeCapError(
                f"predicted node count {predicted} exceeds the cap of {self.size_cap}"
            )


@dataclass
class StepFrontier:
    """Partition of the nodes appearing at one corona step.

    ``x_nodes`` are attached to skeletal parents; ``y_nodes`` is the offshoot
    subset of ``x_nodes``; ``deep_nodes`` are attached to offshoot parents.
    """

    step: int
    x_nodes: np.ndarray
    y_nodes: np.ndarray
    deep_nodes: np.ndarray


@dataclass
class TraceStep:
    step: int
    hubs: list[int]
    nonhubs: list[int]
    sc_links_added: int
    x_size: int
    y_size: int
    deep_offshoot_size: int

    @property
    def skeletal_added(self) -> int:
        return self.x_size - self.y_size


@dataclass
class Elections:
    step: int
    hubs: list[int]
    nonhubs: list[int]


@dataclass
class HubRecord:
    node: int
    birth_step: int
    election_step: int
    final_degree: int


class SccgState:
    """Mutable build state threaded through the per-step operations."""

    def __init__(self, seed: SeedGraph, policy: HubPolicy):
        self.seed = seed
        self.policy = policy
        n = seed.n
        self.n = n
        self.adj: list[set[int]] = [set(seed.graph.neighbors(v).tolist()) for v in range(n)]
        self.birth: list[int] = [0] * n
        self.parent: list[int] = [-1] * n
        self.copy_of: list[int] = [0] * n
        self.node_class: list[NodeClass | None] = [NodeClass.SKELETAL] * n
        self.role: list[Role] = [Role.SIMPLE] * n
        self.chain: list[tuple[int, ...]] = [()] * n
        # copy bookkeeping: the seed itself is copy 0, born at step 0
        self.copy_start: list[int] = [0]
        self.copy_birth: list[int] = [0]
        self.copy_skeletal: list[bool] = [True]
        self.pair: dict[int, tuple[int, int]] = {}
        self.partner: dict[int, int] = {}
        self.hub_elected_at: dict[int, int] = {}
        self.new_start: int = n  # first node id of the current step's additions

    @property
    def node_count(self) -> int:
        return len(self.adj)

    def add_edge(self, u: int, v: int) -> int:
        """Idempotent edge insertion; returns 1 if the edge was new."""
        if v in self.adj[u]:
            return 0
        self.adj[u].add(v)
        self.adj[v].add(u)
        return 1

    def copy_members(self, copy: int) -> range:
        start = self.copy_start[copy]
        return range(start, start + self.n)


def corona_step(state: SccgState, step: int) -> None:
    """Append one corona product: a fresh seed copy per existing node."""
    old = state.node_count
    n = state.n
    hu, hv = state.seed.graph.edge_arrays()
    copy_edges = list(zip(hu.tolist(), hv.tolist()))
    state.new_start = old
    for p in range(old):
        base = old + p * n
        copy = len(state.copy_start)
        state.copy_start.append(base)
        state.copy_birth.append(step)
        state.copy_skeletal.append(False)  # settled by classify_new_nodes
        for k in range(n):
            state.adj.append({p})
            state.birth.append(step)
            state.parent.append(p)
            state.copy_of.append(copy)
            state.node_class.append(None)
            state.role.append(Role.SIMPLE)
            state.chain.append(())
        state.adj[p].update(range(base, base + n))
        for a, b in copy_edges:
            state.adj[base + a].add(base + b)
            state.adj[base + b].add(base + a)


def classify_new_nodes(state: SccgState, step: int) -> StepFrontier:
    """Label the step's nodes skeletal/offshoot and split them into X/Y/deep.

    A copy is skeletal exactly when it is the first copy ever attached to a
    skeletal node; later copies on skeletal nodes and all copies on offshoot
    nodes are offshoot.
    """
    x: list[int] = []
    y: list[int] = []
    deep: list[int] = []
    for u in range(state.new_start, state.node_count):
        p = state.parent[u]
        parent_skeletal = state.node_class[p] is NodeClass.SKELETAL
        if parent_skeletal and state.birth[p] == step - 1:
            cls = NodeClass.SKELETAL
            state.copy_skeletal[state.copy_of[u]] = True
        else:
            cls = NodeClass.OFFSHOOT
        state.node_class[u] = cls
        if parent_skeletal:
            x.append(u)
            if cls is NodeClass.OFFSHOOT:
                y.append(u)
        else:
            deep.append(u)
    return StepFrontier(
        step=step,
        x_nodes=np.asarray(x, dtype=np.int64),
        y_nodes=np.asarray(y, dtype=np.int64),
        deep_nodes=np.asarray(deep, dtype=np.int64),
    )


def elect_hubs_and_nonhubs(state: SccgState, step: int, policy: HubPolicy) -> Elections:
    """Elect one (hub, non-hub) pair per skeletal copy born at step - 1.

    At step 1 that copy is the seed itself. The hub is the copy's highest
    degree node in the current graph, ties broken toward the lowest id; the
    non-hub is the lowest-id member distinct from the hub. A node never
    changes role after its first election.
    """
    hubs: list[int] = []
    nonhubs: list[int] = []
    for copy in range(len(state.copy_start)):
        if state.copy_birth[copy] != step - 1 or not state.copy_skeletal[copy]:
            continue
        members = state.copy_members(copy)
        hub = members[0]
        best = len(state.adj[hub])
        for u in members:
            d = len(state.adj[u])
            if d > best:
                hub, best = u, d
        nonhub = members[0] if hub != members[0] else members[0] + 1
        if state.role[hub] is Role.SIMPLE:
            state.role[hub] = Role.HUB
        if state.role[nonhub] is Role.SIMPLE:
            state.role[nonhub] = Role.NON_HUB
        state.pair[copy] = (hub, nonhub)
        state.partner[hub] = nonhub
        state.hub_elected_at.setdefault(hub, step)
        hubs.append(hub)
        nonhubs.append(nonhub)
    return Elections(step=step, hubs=hubs, nonhubs=nonhubs)


def apply_sc_links(
    state: SccgState, step: int, frontier: StepFrontier, elections: Elections
) -> int:
    """Run the self-coordination pass for one step; returns edges added.

    Every new node links to the hub of its lineage (substituting the paired
    non-hub when the hub link already exists) and to every hub in its
    inherited ancestor chain. Nodes under an offshoot parent use the nearest
    ancestor hub as their lineage hub. All insertions are idempotent.
    """
    added = 0
    pair_deep = state.policy.deep_attach == "hub_nonhub_pair"
    for u in range(state.new_start, state.node_count):
        p = state.parent[u]
        if state.node_class[p] is NodeClass.SKELETAL:
            hub, nonhub = state.pair[state.copy_of[p]]
            chain_above = state.chain[p]
            state.chain[u] = chain_above + (hub,)
        else:
            inherited = state.chain[p]
            hub = inherited[-1]
            nonhub = state.partner[hub]
            chain_above = inherited[:-1]
            state.chain[u] = inherited
            if pair_deep:
                added += state.add_edge(u, hub)
                added += state.add_edge(u, nonhub)
                for h in chain_above:
                    added += state.add_edge(u, h)
                continue
        if hub in state.adj[u]:
            added += state.add_edge(u, nonhub)
        else:
            added += state.add_edge(u, hub)
        for h in chain_above:
            added += state.add_edge(u, h)
    return added


@dataclass
class SccgResult:
    graph: Graph
    meta: list[NodeMeta]
    trace: list[TraceStep]
    params: SccgParams

    def hubs(self) -> list[int]:
        """All elected hubs across steps, ascending."""
        out: list[int] = []
        for ts in self.trace:
            out.extend(ts.hubs)
        return sorted(out)

    def hub_records(self) -> list[HubRecord]:
        recs = []
        for ts in self.trace:
            for h in ts.hubs:
                recs.append(
                    HubRecord(
                        node=h,
                        birth_step=self.meta[h].birth_step,
                        election_step=ts.step,
                        final_degree=self.graph.degree(h),
                    )
                )
        return recs


def sccg_generate(params: SccgParams) -> SccgResult:
    """Generate a self-coordinated corona graph.

    The node set equals the plain corona graph's (the self-coordination pass
    adds edges only); the trace records every election and link count.
    """
    state = SccgState(params.seed, params.policy)
    trace: list[TraceStep] = []
    for step in range(1, params.steps + 1):
        corona_step(state, step)
        frontier = classify_new_nodes(state, step)
        elections = elect_hubs_and_nonhubs(state, step, params.policy)
        added = apply_sc_links(state, step, frontier, elections)
        trace.append(
            TraceStep(
                step=step,
                hubs=elections.hubs,
                nonhubs=elections.nonhubs,
                sc_links_added=added,
                x_size=int(frontier.x_nodes.size),
                y_size=int(frontier.y_nodes.size),
                deep_offshoot_size=int(frontier.deep_nodes.size),
            )
        )
    graph = graph_from_adjacency_sets(state.adj)
    meta = [
        NodeMeta(
            birth_step=state.birth[v],
            node_class=state.node_class[v],  # type: ignore[arg-type]
            role=state.role[v],
            corona_parent=None if state.parent[v] < 0 else state.parent[v],
            copy_id=state.copy_of[v],
            ancestor_hubs=state.chain[v],
        )
        for v in range(state.node_count)
    ]
    return SccgResult(graph=graph, meta=meta, trace=trace, params=params)


def predicted_top_hub_degree(seed: SeedGraph, m: int) -> int:
    """Final degree of the step-1 hub: k0_max + n((n+1)^m - 1)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return seed.k0_max + seed.n * ((seed.n + 1) ** m - 1)


def predicted_hub_degree(seed: SeedGraph, m: int, j: int) -> int:
    """Closed-form degree of a hub that appeared at step m - j.

    Valid for 1 <= j <= m-1: k0_max + (m - j + 1) + n((n+1)^j - 1).
    """
    if not 1 <= j <= m - 1:
        raise ValueError("j must satisfy 1 <= j <= m-1")
    return seed.k0_max + (m - j + 1) + seed.n * ((seed.n + 1) ** j - 1)


def hub_degree_interval(seed: SeedGraph, m: int) -> tuple[int, int]:
    """Analytic hub-degree band [k0_max + m + n^2, k0_max + n((n+1)^m - 1)].

    Diagnostic only: the election trace is the ground truth for hub
    membership, and for small seeds at m = 1 the lower bound can exceed the
    upper bound.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    lo = seed.k0_max + m + seed.n * seed.n
    hi = seed.k0_max + seed.n * ((seed.n + 1) ** m - 1)
    return lo, hi


def cumulative_hub_frequency(n: int, m: int, j: int) -> int:
    """Hubs at least as high-degree as the step-(m-j) generation, top excluded.

    Exact integer n(n^(m-j) - 1)/(n - 1): the geometric total of the hub
    generations elected at steps 2..m-j+1, which all sit at or above that
    generation's degree while the single first hub sits above them all.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if not 1 <= j <= m - 1:
        raise ValueError("j must satisfy 1 <= j <= m-1")
    return n * (n ** (m - j) - 1) // (n - 1)


def analytic_gamma(n: int, m: int) -> float:
    """Power-law exponent of the hub degree distribution.

    Evaluates the cumulative-frequency exponent at the densest hub
    generation (j = m - 1): gamma = 1 + m ln(n+1) / (ln n + (m-1) ln(n+1)),
    which tends to 2 as m grows.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if m < 2:
        raise ValueError("m must be at least 2")
    return 1.0 + m * math.log(n + 1) / (math.log(n) + (m - 1) * math.log(n + 1))
