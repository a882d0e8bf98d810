"""Super-vertex merged graph and the cut-minimizing group optimization.

Communities from detection become weighted super vertices; the optimizer
relocates super vertices between groups, scoring every candidate grouping by
(cuts, idle slots) under the closest-first scheduler, and keeps strict
lexicographic improvements until a full sweep changes nothing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .community import Partition, community_qubits
from .gategraph import GateGraph
from .scheduling import ObjectivePair, Schedule, WorkerPool, closest_first_schedule, objectives


@dataclass(frozen=True)
class MergedGraph:
    weights: dict[int, int]  # super vertex id -> qubit weight of its community
    edges: dict[tuple[int, int], int]  # unordered sv pair -> summed crossing weight
    origin: dict[int, frozenset[int]]  # super vertex id -> original gate ids
    adj: dict[int, dict[int, int]]

    @classmethod
    def build(
        cls,
        weights: dict[int, int],
        edges: dict[tuple[int, int], int],
        origin: dict[int, frozenset[int]],
    ) -> "MergedGraph":
        adj: dict[int, dict[int, int]] = {sv: {} for sv in weights}
        for (i, j), w in edges.items():
            adj[i][j] = w
            adj[j][i] = w
        return cls(weights, edges, origin, adj)


def build_merged_graph(graph: GateGraph, partition: Partition) -> MergedGraph:
    """Collapse each community to a super vertex carrying its qubit count.

    Edges inside a community disappear; edges between communities sum into a
    single super edge whose weight is the number of shared qubits.
    """
    comms = partition.communities()
    weights = {cid: community_qubits(graph, partition, cid) for cid in comms}
    edges: dict[tuple[int, int], int] = {}
    for (i, j), w in graph.edges.items():
        ci, cj = partition.assignment[i], partition.assignment[j]
        if ci != cj:
            key = (ci, cj) if ci < cj else (cj, ci)
            edges[key] = edges.get(key, 0) + w
    origin = {cid: frozenset(members) for cid, members in comms.items()}
    return MergedGraph.build(weights, edges, origin)


@dataclass(frozen=True)
class GroupAssignment:
    """super vertex id -> group id (dense 0..k-1), plus each group's qubit width."""

    group_of: dict[int, int]
    widths: dict[int, int]


def merged_group_width(merged: MergedGraph, members: set[int]) -> int:
    """Qubit width of a set of super vertices: vertex weights minus internal edges."""
    width = sum(merged.weights[sv] for sv in members)
    for (i, j), w in merged.edges.items():
        if i in members and j in members:
            width -= w
    return width


def fitcut_optimize(
    merged: MergedGraph, pool: WorkerPool, qc_input: int
) -> tuple[GroupAssignment, Schedule, ObjectivePair]:
    """Greedy super-vertex relocation under the two-tiered objective.

    Starts from one group per super vertex (always schedulable, since
    detection capped community widths at half the largest worker). Sweeps
    super vertices in ascending id; for each, tries every neighboring group,
    skips relocations whose widest group would exceed the largest capacity,
    and applies the best candidate that strictly improves (nc, ru). Stops when
    a full sweep accepts nothing.
    """
    svs = sorted(merged.weights)
    group_of = {sv: i for i, sv in enumerate(svs)}
    members: dict[int, set[int]] = {i: {sv} for i, sv in enumerate(svs)}
    widths: dict[int, int] = {i: merged.weights[sv] for i, sv in enumerate(svs)}
    max_cap = pool.max_capacity

    def links_to(sv: int, group: int) -> int:
        return sum(w for u, w in merged.adj[sv].items() if group_of[u] == group and u != sv)

    def score(width_map: dict[int, int]) -> tuple[ObjectivePair, Schedule]:
        order = sorted(width_map)
        width_list = [width_map[g] for g in order]
        sched = closest_first_schedule(pool, width_list)
        return objectives(sched, width_list, pool, qc_input), sched

    if not svs:
        return GroupAssignment({}, {}), Schedule({w.id: () for w in pool.workers}), ObjectivePair(
            0 - qc_input, 0
        )

    current_obj, _ = score(widths)
    improved = True
    while improved:
        improved = False
        for sv in svs:
            src = group_of[sv]
            neighbor_groups = sorted({group_of[u] for u in merged.adj[sv]} - {src})
            if not neighbor_groups:
                continue
            best_key = current_obj.key()
            best = None
            src_width_without = widths[src] - merged.weights[sv] + links_to(sv, src)
            for dst in neighbor_groups:
                trial = dict(widths)
                if len(members[src]) == 1:
                    del trial[src]
                else:
                    trial[src] = src_width_without
                trial[dst] = widths[dst] + merged.weights[sv] - links_to(sv, dst)
                if max(trial.values()) > max_cap:
                    continue
                obj, _ = score(trial)
                if obj.key() < best_key:
                    best_key = obj.key()
                    best = (dst, trial)
            if best is not None:
                dst, trial = best
                members[src].discard(sv)
                if not members[src]:
                    del members[src]
                members.setdefault(dst, set()).add(sv)
                group_of[sv] = dst
                widths = trial
                current_obj = ObjectivePair(*best_key)
                improved = True

    compact = {g: i for i, g in enumerate(sorted(widths))}
    grouping = GroupAssignment(
        {sv: compact[group_of[sv]] for sv in svs},
        {compact[g]: w for g, w in widths.items()},
    )
    final_widths = [grouping.widths[g] for g in sorted(grouping.widths)]
    schedule = closest_first_schedule(pool, final_widths)
    obj = objectives(schedule, final_widths, pool, qc_input)
    return grouping, schedule, obj
