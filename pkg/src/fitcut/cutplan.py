"""Turn a final grouping into wire-cut positions, subcircuits, and utilization.

Each subcircuit is materialized per wire *segment*: a qubit whose wire leaves
a group and comes back occupies two segments, hence two qubits of width. Cut
boundaries stay symbolic (init/measure markers); no basis rotations are
emitted, since reconstruction happens elsewhere.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit
from .community import Partition
from .optimize import GroupAssignment
from .scheduling import Schedule, WorkerPool


@dataclass(frozen=True)
class CutPoint:
    """A wire severed between two adjacent two-qubit gates in different groups."""

    qubit: int
    after_gate: int
    before_gate: int


@dataclass(frozen=True)
class WireSegment:
    qubit: int  # original wire index
    gate_ids: tuple[int, ...]  # gates riding this segment, program order
    enters_by_cut: bool
    exits_by_cut: bool


@dataclass(frozen=True)
class Subcircuit:
    id: int
    gate_ids: tuple[int, ...]  # ascending, i.e. original program order
    width: int
    depth: int
    segments: tuple[WireSegment, ...]  # local qubit i of the subcircuit = segments[i]


def extract_cuts(
    circuit: Circuit, grouping: GroupAssignment, partition: Partition
) -> tuple[list[CutPoint], list[Subcircuit]]:
    """Walk every wire, emit a cut at each group transition, materialize subcircuits.

    One-qubit gates ride with the nearest preceding two-qubit gate on their
    wire (else the nearest following one); wires carrying only one-qubit gates
    become dedicated width-1 subcircuits appended after the groups.
    """
    group_of_gate: dict[int, int] = {}
    for g in circuit.gates:
        if g.is_two_qubit:
            cid = partition.assignment.get(g.id)
            if cid is None:
                raise ValueError(f"partition does not cover two-qubit gate {g.id}")
            gid = grouping.group_of.get(cid)
            if gid is None:
                raise ValueError(f"grouping does not cover community {cid} (gate {g.id})")
            group_of_gate[g.id] = gid

    wires: dict[int, list[int]] = {q: [] for q in range(circuit.num_qubits)}
    for g in circuit.gates:
        for q in g.qubits:
            wires[q].append(g.id)

    cuts: list[CutPoint] = []
    segments_by_group: dict[object, list[dict]] = {}

    for q in range(circuit.num_qubits):
        cur: dict | None = None
        cur_group: int | None = None
        prev2: int | None = None
        head: list[int] = []
        for gid in wires[q]:
            gate = circuit.gates[gid]
            if not gate.is_two_qubit:
                if cur is not None:
                    cur["gates"].append(gid)
                else:
                    head.append(gid)
                continue
            grp = group_of_gate[gid]
            if cur is None:
                cur = {"qubit": q, "gates": head + [gid], "in_cut": False, "out_cut": False}
                head = []
                segments_by_group.setdefault(grp, []).append(cur)
            elif grp == cur_group:
                cur["gates"].append(gid)
            else:
                cuts.append(CutPoint(q, prev2, gid))
                cur["out_cut"] = True
                cur = {"qubit": q, "gates": [gid], "in_cut": True, "out_cut": False}
                segments_by_group.setdefault(grp, []).append(cur)
            cur_group = grp
            prev2 = gid
        if cur is None and head:
            segments_by_group.setdefault(("idle", q), []).append(
                {"qubit": q, "gates": head, "in_cut": False, "out_cut": False}
            )

    ordered_keys: list[object] = sorted(grouping.widths)
    ordered_keys += sorted(
        (k for k in segments_by_group if isinstance(k, tuple)), key=lambda k: k[1]
    )

    subcircuits = []
    for sub_id, key in enumerate(ordered_keys):
        raw = segments_by_group.get(key)
        if raw is None:
            raise ValueError(f"group {key} has no gates")
        raw.sort(key=lambda seg: seg["gates"][0])
        segments = tuple(
            WireSegment(seg["qubit"], tuple(seg["gates"]), seg["in_cut"], seg["out_cut"])
            for seg in raw
        )
        gate_ids = tuple(sorted({gid for seg in segments for gid in seg.gate_ids}))
        subcircuits.append(
            Subcircuit(
                id=sub_id,
                gate_ids=gate_ids,
                width=len(segments),
                depth=_chain_depth(circuit, segments, gate_ids),
                segments=segments,
            )
        )
    return cuts, subcircuits


def _chain_depth(
    circuit: Circuit, segments: tuple[WireSegment, ...], gate_ids: tuple[int, ...]
) -> int:
    """Longest gate chain through the subcircuit, each segment being its own qubit."""
    local: dict[tuple[int, int], int] = {}
    for idx, seg in enumerate(segments):
        for gid in seg.gate_ids:
            local[(gid, seg.qubit)] = idx
    reached = [0] * len(segments)
    depth = 0
    for gid in gate_ids:
        gate = circuit.gates[gid]
        slots = [local[(gid, q)] for q in gate.qubits if (gid, q) in local]
        d = 1 + max(reached[s] for s in slots)
        for s in slots:
            reached[s] = d
        depth = max(depth, d)
    return depth


@dataclass(frozen=True)
class WorkerUtilization:
    worker_id: int
    capacity: int
    subcircuit_ids: tuple[int, ...]
    total_depth: int
    utilization: float  # depth-weighted: sum(width/capacity * depth) / sum(depth)


@dataclass(frozen=True)
class UtilizationReport:
    workers: tuple[WorkerUtilization, ...]  # only workers with assignments
    system_utilization: float
    total_depth: int


def utilization_report(
    schedule: Schedule, subcircuits: list[Subcircuit], pool: WorkerPool
) -> UtilizationReport:
    """Per-worker and system depth-weighted qubit utilization."""
    by_id = {s.id: s for s in subcircuits}
    rows = []
    weighted_sum = 0.0
    depth_sum = 0
    for worker in sorted(pool.workers, key=lambda w: w.id):
        pids = schedule.assignment.get(worker.id, ())
        if not pids:
            continue
        w_weighted = sum(by_id[p].width / worker.capacity * by_id[p].depth for p in pids)
        w_depth = sum(by_id[p].depth for p in pids)
        rows.append(
            WorkerUtilization(
                worker.id, worker.capacity, tuple(pids), w_depth, w_weighted / w_depth
            )
        )
        weighted_sum += w_weighted
        depth_sum += w_depth
    system = weighted_sum / depth_sum if depth_sum else 0.0
    return UtilizationReport(tuple(rows), system, depth_sum)


def subcircuit_to_text(circuit: Circuit, sub: Subcircuit) -> str:
    """Render a subcircuit in the circuit text format over its local qubits.

    Cut boundaries appear as comment placeholders (init before a segment that
    starts at a cut, measure after one that ends at a cut), so the file parses
    back to exactly the subcircuit's gates.
    """
    local: dict[tuple[int, int], int] = {}
    for idx, seg in enumerate(sub.segments):
        for gid in seg.gate_ids:
            local[(gid, seg.qubit)] = idx

    entries: list[tuple[tuple[int, int], str]] = []
    for idx, seg in enumerate(sub.segments):
        if seg.enters_by_cut:
            entries.append(((seg.gate_ids[0], -1), f"# init q{idx} (cut on wire {seg.qubit})"))
        if seg.exits_by_cut:
            entries.append(((seg.gate_ids[-1], 1), f"# measure q{idx} (cut on wire {seg.qubit})"))
    for gid in sub.gate_ids:
        gate = circuit.gates[gid]
        qubits = [local[(gid, q)] for q in gate.qubits]
        parts = [gate.name, *[str(q) for q in qubits], *[repr(p) for p in gate.params]]
        entries.append(((gid, 0), " ".join(parts)))
    entries.sort(key=lambda e: e[0])
    lines = [f"qubits {sub.width}"]
    lines += [text for _, text in entries]
    return "\n".join(lines) + "\n"
