"""End-to-end cut search: transform, detect, merge-optimize, extract, schedule.

The multi-run entry point replays the pipeline over consecutive seeds and
keeps the plan with the lexicographically best (cuts, idle slots); ties go to
the lowest seed so output is reproducible byte for byte.
"""
from __future__ import annotations

import concurrent.futures
import json
import statistics
import time
from dataclasses import dataclass

from .circuit import Circuit, build_dag
from .community import DetectParams, Partition, constrained_louvain
from .cutplan import (
    CutPoint,
    Subcircuit,
    UtilizationReport,
    extract_cuts,
    utilization_report,
)
from .gategraph import to_gate_graph
from .optimize import GroupAssignment, build_merged_graph, fitcut_optimize
from .scheduling import (
    ObjectivePair,
    Schedule,
    WorkerPool,
    closest_first_schedule,
    min_subcircuit_count,
    objectives,
)


@dataclass(frozen=True)
class CutPlan:
    circuit: Circuit
    seed: int
    partition: Partition
    grouping: GroupAssignment
    cuts: tuple[CutPoint, ...]
    subcircuits: tuple[Subcircuit, ...]
    schedule: Schedule
    objectives: ObjectivePair
    utilization: UtilizationReport
    search_seconds: float  # transform + detection + optimization only


@dataclass(frozen=True)
class RunStat:
    seed: int
    nc: int
    ru: int
    seconds: float


@dataclass(frozen=True)
class CutSearchResult:
    best: CutPlan
    runs: tuple[RunStat, ...]

    def nc_values(self) -> list[int]:
        return [r.nc for r in self.runs]

    def summary(self) -> dict:
        ncs = self.nc_values()
        return {
            "runs": len(self.runs),
            "nc_min": min(ncs),
            "nc_median": statistics.median(ncs),
            "nc_max": max(ncs),
            "best_seed": self.best.seed,
            "best_nc": self.best.objectives.nc,
            "best_ru": self.best.objectives.ru,
        }

    def mean_seconds(self) -> float:
        return sum(r.seconds for r in self.runs) / len(self.runs)


def _search_grouping(
    graph, pool: WorkerPool, seed: int
) -> tuple[Partition, GroupAssignment, ObjectivePair]:
    """Detect communities and optimize the grouping, coarse to fine.

    Detection returns the coarsest capacity-satisfying level; if optimizing
    that granularity leaves the cut count above the subcircuit-count floor,
    the finer accepted levels (down to singletons) are tried too and the
    lexicographically best (nc, ru) wins. Every level satisfies the community
    qubit cap, so any rung's partition is valid downstream.
    """
    levels: list[Partition] = []
    params = DetectParams.for_worker_capacity(pool.max_capacity, seed)
    constrained_louvain(graph, params, _trace=levels)
    qc_active = graph.qubit_count()
    nc_floor = min_subcircuit_count(pool.max_capacity, qc_active) - 1
    best = None
    seen: set[tuple] = set()
    for partition in reversed(levels):
        key = tuple(sorted(partition.assignment.items()))
        if key in seen:
            continue
        seen.add(key)
        merged = build_merged_graph(graph, partition)
        grouping, _, obj = fitcut_optimize(merged, pool, qc_active)
        if best is None or obj.key() < best[2].key():
            best = (partition, grouping, obj)
        if best[2].nc <= nc_floor:
            break
    return best


def cut_circuit_once(circuit: Circuit, pool: WorkerPool, seed: int = 0) -> CutPlan:
    """One seeded pass of the full pipeline."""
    start = time.perf_counter()
    graph = to_gate_graph(build_dag(circuit))
    if graph.vertices:
        partition, grouping, _ = _search_grouping(graph, pool, seed)
    else:
        partition = Partition({})
        grouping = GroupAssignment({}, {})
    search_seconds = time.perf_counter() - start

    cuts, subs = extract_cuts(circuit, grouping, partition)
    widths = [s.width for s in subs]
    schedule = closest_first_schedule(pool, widths)
    obj = objectives(schedule, widths, pool, len(circuit.used_qubits()))
    report = utilization_report(schedule, subs, pool)
    return CutPlan(
        circuit=circuit,
        seed=seed,
        partition=partition,
        grouping=grouping,
        cuts=tuple(cuts),
        subcircuits=tuple(subs),
        schedule=schedule,
        objectives=obj,
        utilization=report,
        search_seconds=search_seconds,
    )


def modularity_only_plan(circuit: Circuit, pool: WorkerPool, seed: int = 0) -> CutPlan:
    """Baseline: schedule the detection communities directly, skipping merge optimization."""
    start = time.perf_counter()
    graph = to_gate_graph(build_dag(circuit))
    if graph.vertices:
        params = DetectParams.for_worker_capacity(pool.max_capacity, seed)
        partition = constrained_louvain(graph, params)
        merged = build_merged_graph(graph, partition)
        grouping = GroupAssignment(
            {sv: sv for sv in merged.weights}, dict(merged.weights)
        )
    else:
        partition = Partition({})
        grouping = GroupAssignment({}, {})
    search_seconds = time.perf_counter() - start

    cuts, subs = extract_cuts(circuit, grouping, partition)
    widths = [s.width for s in subs]
    schedule = closest_first_schedule(pool, widths)
    obj = objectives(schedule, widths, pool, len(circuit.used_qubits()))
    report = utilization_report(schedule, subs, pool)
    return CutPlan(
        circuit, seed, partition, grouping, tuple(cuts), tuple(subs), schedule, obj,
        report, search_seconds,
    )


def _one_run(args: tuple[Circuit, WorkerPool, int]) -> CutPlan:
    circuit, pool, seed = args
    return cut_circuit_once(circuit, pool, seed)


def cut_circuit(
    circuit: Circuit, pool: WorkerPool, seed: int = 0, runs: int = 1, jobs: int = 1
) -> CutSearchResult:
    """Run the pipeline over seeds seed..seed+runs-1 and keep the best plan."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    seeds = list(range(seed, seed + runs))
    if jobs > 1 and runs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool_exec:
            plans = list(pool_exec.map(_one_run, [(circuit, pool, s) for s in seeds]))
    else:
        plans = [cut_circuit_once(circuit, pool, s) for s in seeds]
    stats = tuple(
        RunStat(p.seed, p.objectives.nc, p.objectives.ru, p.search_seconds) for p in plans
    )
    best = min(plans, key=lambda p: (p.objectives.nc, p.objectives.ru, p.seed))
    return CutSearchResult(best, stats)


def plan_to_dict(plan: CutPlan, summary: dict | None = None) -> dict:
    """JSON-ready view of a plan; deterministic for a given plan (no timing fields)."""
    out: dict = {
        "circuit": {
            "qubits": plan.circuit.num_qubits,
            "gates": len(plan.circuit.gates),
            "two_qubit_gates": len(plan.circuit.two_qubit_gates()),
        },
        "seed": plan.seed,
        "cuts": [
            {"qubit": c.qubit, "after": c.after_gate, "before": c.before_gate}
            for c in plan.cuts
        ],
        "subcircuits": [
            {"id": s.id, "width": s.width, "depth": s.depth, "gates": list(s.gate_ids)}
            for s in plan.subcircuits
        ],
        "schedule": {
            str(wid): list(pids)
            for wid, pids in sorted(plan.schedule.assignment.items())
        },
        "objectives": {"nc": plan.objectives.nc, "ru": plan.objectives.ru},
        "utilization": {
            "system": plan.utilization.system_utilization,
            "total_depth": plan.utilization.total_depth,
            "workers": {
                str(w.worker_id): {
                    "capacity": w.capacity,
                    "subcircuits": list(w.subcircuit_ids),
                    "total_depth": w.total_depth,
                    "utilization": w.utilization,
                }
                for w in plan.utilization.workers
            },
        },
    }
    if summary is not None:
        out["summary"] = summary
    return out


def plan_to_json(plan: CutPlan, summary: dict | None = None) -> str:
    return json.dumps(plan_to_dict(plan, summary), indent=2) + "\n"
