"""Modularity and qubit-constrained community detection on the gate graph.

Detection runs standard weighted Louvain levels (greedy local moves, then
agglomeration) but bounds every community's qubit footprint: after each
level, communities are checked against the cap and the last level that
satisfies it is the one returned.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .gategraph import GateGraph, total_edge_weight

GAIN_TOL = 1e-12


@dataclass(frozen=True)
class Partition:
    """Assignment of every graph vertex to a community id, ids dense 0..k-1."""

    assignment: dict[int, int]

    def communities(self) -> dict[int, list[int]]:
        groups: dict[int, list[int]] = {}
        for v in sorted(self.assignment):
            groups.setdefault(self.assignment[v], []).append(v)
        return groups

    @property
    def num_communities(self) -> int:
        return len(set(self.assignment.values()))


@dataclass(frozen=True)
class DetectParams:
    """qubit_cap is half the largest worker capacity; seed drives vertex shuffles."""

    qubit_cap: int
    seed: int = 0
    max_levels: int = 64
    verify_gains: bool = False  # debug: recheck every incremental gain from scratch

    def __post_init__(self):
        if self.qubit_cap < 2:
            raise ValueError(
                f"qubit_cap must be >= 2 (largest worker must have >= 4 qubits), got {self.qubit_cap}"
            )
        if self.max_levels < 1:
            raise ValueError("max_levels must be positive")

    @classmethod
    def for_worker_capacity(cls, max_capacity: int, seed: int = 0) -> "DetectParams":
        return cls(qubit_cap=max_capacity // 2, seed=seed)


def modularity(graph: GateGraph, partition: Partition) -> float:
    """Partition quality: in-community edge density against the degree null model.

    Defined as 0 for an edgeless graph.
    """
    m = total_edge_weight(graph)
    if m == 0:
        return 0.0
    _check_cover(graph, partition)
    internal: dict[int, int] = {}
    k_tot: dict[int, int] = {}
    for v in graph.vertices:
        c = partition.assignment[v]
        k_tot[c] = k_tot.get(c, 0) + graph.degree(v)
        internal.setdefault(c, 0)
    for (i, j), w in graph.edges.items():
        if partition.assignment[i] == partition.assignment[j]:
            internal[partition.assignment[i]] += w
    return sum(
        internal[c] / m - (k_tot[c] / (2 * m)) ** 2 for c in internal
    )


def community_modularity(graph: GateGraph, partition: Partition, community_id: int) -> float:
    """One community's share: sum_in/2m - (sum_tot/2m)^2, internal edges counted twice."""
    members = [v for v, c in partition.assignment.items() if c == community_id]
    if not members:
        raise ValueError(f"unknown community id {community_id}")
    m = total_edge_weight(graph)
    if m == 0:
        return 0.0
    member_set = set(members)
    sum_in = 2 * sum(
        w for (i, j), w in graph.edges.items() if i in member_set and j in member_set
    )
    sum_tot = sum(graph.degree(v) for v in members)
    return sum_in / (2 * m) - (sum_tot / (2 * m)) ** 2


def community_qubits(graph: GateGraph, partition: Partition, community_id: int) -> int:
    """Qubit footprint of a community: 2*|C| minus its internal edge weight.

    Counts wire segments, so a qubit whose wire leaves and re-enters the
    community is counted once per segment.
    """
    members = [v for v, c in partition.assignment.items() if c == community_id]
    if not members:
        raise ValueError(f"unknown community id {community_id}")
    member_set = set(members)
    internal = sum(
        w for (i, j), w in graph.edges.items() if i in member_set and j in member_set
    )
    return 2 * len(members) - internal


def _check_cover(graph: GateGraph, partition: Partition) -> None:
    if set(partition.assignment) != set(graph.vertices):
        raise ValueError("partition does not cover the graph's vertices exactly")


def _renumber(assignment: dict[int, int]) -> dict[int, int]:
    """Dense community ids, ordered by each community's smallest vertex."""
    first_seen: dict[int, int] = {}
    for v in sorted(assignment):
        c = assignment[v]
        if c not in first_seen:
            first_seen[c] = len(first_seen)
    return {v: first_seen[assignment[v]] for v in assignment}


def _level_modularity(
    comm: dict[int, int],
    adj: dict[int, dict[int, int]],
    self_w: dict[int, int],
    node_k: dict[int, int],
    m: int,
) -> float:
    internal: dict[int, float] = {}
    k_tot: dict[int, float] = {}
    for v, c in comm.items():
        internal[c] = internal.get(c, 0) + self_w[v]
        k_tot[c] = k_tot.get(c, 0) + node_k[v]
    for v, nbrs in adj.items():
        for u, w in nbrs.items():
            if v < u and comm[v] == comm[u]:
                internal[comm[v]] += w
    return sum(internal[c] / m - (k_tot[c] / (2 * m)) ** 2 for c in internal)


def _one_level(
    nodes: list[int],
    adj: dict[int, dict[int, int]],
    self_w: dict[int, int],
    node_k: dict[int, int],
    m: int,
    rng: random.Random,
    verify_gains: bool,
) -> tuple[dict[int, int], bool]:
    """Greedy local-move phase; returns (community of each node, whether any move happened)."""
    comm = {v: v for v in nodes}
    k_tot = {v: node_k[v] for v in nodes}  # community total degree, keyed by community id
    order = sorted(nodes)
    rng.shuffle(order)
    any_move = False
    while True:
        moved = False
        for v in order:
            cv = comm[v]
            links: dict[int, int] = {}
            for u, w in adj[v].items():
                cu = comm[u]
                links[cu] = links.get(cu, 0) + w
            kv = node_k[v]
            k_tot[cv] -= kv  # evaluate with v taken out of its community
            l_own = links.get(cv, 0)
            best_c = cv
            best_gain = GAIN_TOL
            for c in sorted(links):
                if c == cv:
                    continue
                gain = (links[c] - l_own) / m - kv * (k_tot[c] - k_tot[cv]) / (2 * m * m)
                if gain > best_gain:
                    best_gain = gain
                    best_c = c
            if verify_gains and best_c != cv:
                before = _level_modularity(comm, adj, self_w, node_k, m)
                trial = dict(comm)
                trial[v] = best_c
                after = _level_modularity(trial, adj, self_w, node_k, m)
                if abs((after - before) - best_gain) > 1e-9:
                    raise AssertionError(
                        f"incremental gain {best_gain} disagrees with recomputation {after - before}"
                    )
            k_tot[best_c] += kv
            comm[v] = best_c
            if best_c != cv:
                moved = True
                any_move = True
        if not moved:
            return comm, any_move


def _aggregate(
    comm: dict[int, int],
    adj: dict[int, dict[int, int]],
    self_w: dict[int, int],
) -> tuple[list[int], dict[int, dict[int, int]], dict[int, int], dict[int, int], dict[int, list[int]]]:
    """Collapse each community to one node; returns the coarser level's structures."""
    labels = sorted(set(comm.values()))
    relabel = {c: i for i, c in enumerate(labels)}
    nodes = list(range(len(labels)))
    new_adj: dict[int, dict[int, int]] = {v: {} for v in nodes}
    new_self = {v: 0 for v in nodes}
    members: dict[int, list[int]] = {v: [] for v in nodes}
    for v in sorted(comm):
        members[relabel[comm[v]]].append(v)
        new_self[relabel[comm[v]]] += self_w[v]
    for v, nbrs in adj.items():
        cv = relabel[comm[v]]
        for u, w in nbrs.items():
            if v < u:
                cu = relabel[comm[u]]
                if cv == cu:
                    new_self[cv] += w
                else:
                    new_adj[cv][cu] = new_adj[cv].get(cu, 0) + w
                    new_adj[cu][cv] = new_adj[cu].get(cv, 0) + w
    new_k = {v: 2 * new_self[v] + sum(new_adj[v].values()) for v in nodes}
    return nodes, new_adj, new_self, new_k, members


def constrained_louvain(
    graph: GateGraph, params: DetectParams, _trace: list[Partition] | None = None
) -> Partition:
    """Louvain levels under the qubit cap.

    Runs greedy passes and agglomeration level by level; after each level the
    qubit footprint of every community is checked, and the first violating
    level is discarded in favor of the previous one. Degree-0 vertices never
    move. The worst case is the all-singleton partition, which satisfies any
    cap >= 2. ``_trace``, if given, collects the accepted partition per level.
    """
    if not graph.vertices:
        return Partition({})
    m = total_edge_weight(graph)
    singleton = Partition(_renumber({v: v for v in graph.vertices}))
    if _trace is not None:
        _trace.append(singleton)
    if m == 0:
        return singleton

    rng = random.Random(params.seed)
    nodes = list(graph.vertices)
    adj = {v: dict(graph.adj[v]) for v in nodes}
    self_w = {v: 0 for v in nodes}
    node_k = {v: graph.degree(v) for v in nodes}
    to_orig = {v: [v] for v in nodes}  # coarse node -> original vertices
    accepted = singleton.assignment

    for _ in range(params.max_levels):
        comm, moved = _one_level(nodes, adj, self_w, node_k, m, rng, params.verify_gains)
        if not moved:
            break
        composed = {}
        for v, c in comm.items():
            for orig in to_orig[v]:
                composed[orig] = c
        if _violates_cap(graph, composed, params.qubit_cap):
            break
        accepted = composed
        if _trace is not None:
            _trace.append(Partition(_renumber(accepted)))
        nodes, adj, self_w, node_k, members = _aggregate(comm, adj, self_w)
        old_to_orig = to_orig
        to_orig = {
            v: [orig for old in members[v] for orig in old_to_orig[old]] for v in nodes
        }
    return Partition(_renumber(accepted))


def _violates_cap(graph: GateGraph, assignment: dict[int, int], cap: int) -> bool:
    size: dict[int, int] = {}
    internal: dict[int, int] = {}
    for v, c in assignment.items():
        size[c] = size.get(c, 0) + 1
        internal.setdefault(c, 0)
    for (i, j), w in graph.edges.items():
        if assignment[i] == assignment[j]:
            internal[assignment[i]] += w
    return any(2 * size[c] - internal[c] > cap for c in size)
