"""Worker pool model, closest-first subcircuit scheduling, and the two objectives.

A worker executes its assigned subcircuits one after another, so its capacity
constrains each assignment individually, not their sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class UnschedulableError(ValueError):
    """A subcircuit width exceeds every worker capacity."""

    def __init__(self, width: int, max_capacity: int):
        super().__init__(
            f"subcircuit width {width} exceeds the largest worker capacity {max_capacity}"
        )
        self.width = width


@dataclass(frozen=True)
class Worker:
    id: int
    capacity: int


@dataclass(frozen=True)
class WorkerPool:
    workers: tuple[Worker, ...]

    def __post_init__(self):
        if not self.workers:
            raise ValueError("worker pool must not be empty")
        if any(w.capacity < 2 for w in self.workers):
            raise ValueError("every worker needs capacity >= 2")
        ids = [w.id for w in self.workers]
        if len(set(ids)) != len(ids):
            raise ValueError("worker ids must be unique")

    @classmethod
    def of_capacities(cls, capacities: Sequence[int]) -> "WorkerPool":
        return cls(tuple(Worker(i, c) for i, c in enumerate(capacities)))

    @property
    def max_capacity(self) -> int:
        return max(w.capacity for w in self.workers)

    def capacity_of(self, worker_id: int) -> int:
        for w in self.workers:
            if w.id == worker_id:
                return w.capacity
        raise KeyError(worker_id)


@dataclass(frozen=True)
class Schedule:
    """worker id -> subcircuit ids, in assignment order; every subcircuit appears once."""

    assignment: dict[int, tuple[int, ...]]

    def all_assigned(self) -> list[int]:
        return [p for ids in self.assignment.values() for p in ids]


@dataclass(frozen=True)
class ObjectivePair:
    nc: int  # number of cuts: sum of subcircuit widths minus the input width
    ru: int  # idle qubit-slots over all assignments

    def key(self) -> tuple[int, int]:
        return (self.nc, self.ru)


def _closest_fit(pool: WorkerPool, width: int) -> Worker:
    eligible = [w for w in pool.workers if w.capacity >= width]
    if not eligible:
        raise UnschedulableError(width, pool.max_capacity)
    return min(eligible, key=lambda w: (w.capacity, w.id))


def closest_first_schedule(pool: WorkerPool, widths: Sequence[int]) -> Schedule:
    """Assign each subcircuit to the tightest-fitting worker, then balance counts.

    Rebalancing walks workers from largest capacity down; for each, the
    workers at least as large share their assignments evenly (between
    ceil(total/count) and one less), moving the widest subcircuit that fits
    the destination first.
    """
    loads: dict[int, list[int]] = {w.id: [] for w in pool.workers}
    for pid, width in enumerate(widths):
        loads[_closest_fit(pool, width).id].append(pid)

    by_cap_desc = sorted(pool.workers, key=lambda w: (-w.capacity, w.id))
    for wi in by_cap_desc:
        wp = [w for w in pool.workers if w.capacity >= wi.capacity]
        if len(wp) <= 1:
            continue
        total = sum(len(loads[w.id]) for w in wp)
        max_count = math.ceil(total / len(wp))
        min_count = max_count - 1
        for wdst in sorted(wp, key=lambda w: (w.capacity, w.id)):
            if wdst.id == wi.id:
                continue
            while len(loads[wi.id]) > max_count and len(loads[wdst.id]) < min_count:
                if not _move_one(loads, widths, wi, wdst):
                    break
            while len(loads[wi.id]) > max_count and len(loads[wdst.id]) < max_count:
                if not _move_one(loads, widths, wi, wdst):
                    break
    return Schedule({wid: tuple(pids) for wid, pids in loads.items()})


def _move_one(
    loads: dict[int, list[int]], widths: Sequence[int], src: Worker, dst: Worker
) -> bool:
    movable = [pid for pid in loads[src.id] if widths[pid] <= dst.capacity]
    if not movable:
        return False
    pick = max(movable, key=lambda pid: (widths[pid], -pid))
    loads[src.id].remove(pick)
    loads[dst.id].append(pick)
    return True


def objectives(
    schedule: Schedule, widths: Sequence[int], pool: WorkerPool, qc_input: int
) -> ObjectivePair:
    """Cut count and idle-slot total for a schedule of the given subcircuit widths."""
    nc = sum(widths) - qc_input
    ru = 0
    for wid, pids in schedule.assignment.items():
        cap = pool.capacity_of(wid)
        ru += sum(cap - widths[pid] for pid in pids)
    return ObjectivePair(nc, ru)


def min_subcircuit_count(qc_worker: int, qc_input: int) -> int:
    """Smallest N with qc_worker*N >= qc_input + N - 1: a floor on subcircuit count."""
    if qc_worker < 2:
        raise ValueError(f"worker capacity must be >= 2, got {qc_worker}")
    if qc_input <= qc_worker:
        return 1
    return math.ceil((qc_input - 1) / (qc_worker - 1))
