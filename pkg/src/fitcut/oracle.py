"""Exhaustive reference solvers for small instances.

These exist so tests (and debugging) can compare heuristic output against a
ground truth computed by plain enumeration. Size caps keep runs around a
second; Bell numbers dominate.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .gategraph import GateGraph, total_edge_weight
from .scheduling import WorkerPool


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    witness: object
    size: int


def brute_min_cuts(graph: GateGraph, cap: int) -> OracleResult:
    """Minimum cut count over all vertex partitions with every block width <= cap.

    Enumerates set partitions (restricted growth) with incremental block
    widths; a block's width can drop by at most 2 per added vertex, which
    gives the only pruning rule. The cut count is the width sum minus the
    whole graph's width.
    """
    verts = sorted(graph.vertices)
    n = len(verts)
    if n > 12:
        raise ValueError(f"instance too large for enumeration: {n} vertices (max 12)")
    if n == 0:
        return OracleResult(0, {}, 0)
    qc_input = 2 * n - total_edge_weight(graph)

    best_total = None
    best_assign: dict[int, int] = {}
    block_members: list[list[int]] = []
    block_widths: list[int] = []
    assign: dict[int, int] = {}

    def recurse(i: int) -> None:
        nonlocal best_total, best_assign
        if i == n:
            if all(w <= cap for w in block_widths):
                total = sum(block_widths)
                if best_total is None or total < best_total:
                    best_total = total
                    best_assign = dict(assign)
            return
        v = verts[i]
        remaining = n - i - 1
        for b in range(len(block_members) + 1):
            if b == len(block_members):
                block_members.append([v])
                block_widths.append(2)
            else:
                link = sum(w for u, w in graph.adj[v].items() if u in member_sets[b])
                block_members[b].append(v)
                block_widths[b] += 2 - link
                member_sets[b].add(v)
            if b == len(member_sets):
                member_sets.append({v})
            assign[v] = b
            # a block more than 2 per remaining vertex over cap can never recover
            if block_widths[b] <= cap + 2 * remaining:
                recurse(i + 1)
            del assign[v]
            block_members[b].pop()
            member_sets[b].discard(v)
            if not block_members[b]:
                block_members.pop(b)
                member_sets.pop(b)
                block_widths.pop(b)
            else:
                link = sum(w for u, w in graph.adj[v].items() if u in member_sets[b])
                block_widths[b] -= 2 - link

    member_sets: list[set[int]] = []
    recurse(0)
    if best_total is None:
        raise ValueError(f"no feasible partition under cap {cap}")
    return OracleResult(best_total - qc_input, best_assign, n)


def brute_max_modularity(graph: GateGraph) -> OracleResult:
    """Exhaustive modularity maximum over all set partitions of the vertices."""
    verts = sorted(graph.vertices)
    n = len(verts)
    if n > 8:
        raise ValueError(f"instance too large for enumeration: {n} vertices (max 8)")
    if n == 0:
        return OracleResult(0.0, {}, 0)
    m = total_edge_weight(graph)
    if m == 0:
        return OracleResult(0.0, {v: i for i, v in enumerate(verts)}, n)

    degree = {v: graph.degree(v) for v in verts}
    best_q = None
    best_assign: dict[int, int] = {}
    blocks: list[set[int]] = []
    assign: dict[int, int] = {}

    def recurse(i: int) -> None:
        nonlocal best_q, best_assign
        if i == n:
            q = 0.0
            for block in blocks:
                w_in = sum(
                    w for (a, b), w in graph.edges.items() if a in block and b in block
                )
                k_tot = sum(degree[v] for v in block)
                q += w_in / m - (k_tot / (2 * m)) ** 2
            if best_q is None or q > best_q + 1e-15:
                best_q = q
                best_assign = dict(assign)
            return
        v = verts[i]
        for b in range(len(blocks) + 1):
            if b == len(blocks):
                blocks.append({v})
            else:
                blocks[b].add(v)
            assign[v] = b
            recurse(i + 1)
            del assign[v]
            blocks[b].discard(v)
            if not blocks[b]:
                blocks.pop(b)

    recurse(0)
    return OracleResult(best_q, best_assign, n)


def brute_balanced_schedule(pool: WorkerPool, widths: Sequence[int]) -> OracleResult:
    """Reference for the scheduler: minimize (max worker load, idle slots).

    Enumerates every capacity-feasible assignment; among those with the
    smallest maximum number of subcircuits on any worker, picks the one with
    the fewest idle qubit-slots.
    """
    if len(widths) > 8:
        raise ValueError(f"instance too large for enumeration: {len(widths)} subcircuits (max 8)")
    if len(pool.workers) > 4:
        raise ValueError(f"instance too large for enumeration: {len(pool.workers)} workers (max 4)")
    options = []
    for width in widths:
        feasible = [w.id for w in pool.workers if w.capacity >= width]
        if not feasible:
            raise ValueError(f"width {width} fits no worker")
        options.append(feasible)
    cap = {w.id: w.capacity for w in pool.workers}
    best_key = None
    best_assign: dict[int, list[int]] = {}
    for combo in itertools.product(*options):
        loads: dict[int, list[int]] = {w.id: [] for w in pool.workers}
        ru = 0
        for pid, wid in enumerate(combo):
            loads[wid].append(pid)
            ru += cap[wid] - widths[pid]
        key = (max(len(v) for v in loads.values()), ru)
        if best_key is None or key < best_key:
            best_key = key
            best_assign = {wid: list(pids) for wid, pids in loads.items() if pids}
    return OracleResult(best_key[1], best_assign, len(widths))
