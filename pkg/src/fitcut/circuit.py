"""Circuit intermediate representation: gates, a minimal text format, and the wire DAG.

A circuit is an ordered list of named gates over dense qubit indices. Gate
semantics (unitaries) are deliberately out of scope; the rest of the pipeline
only cares about which qubits each gate touches and in what order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

ONE_QUBIT_GATES = frozenset(
    {"h", "x", "y", "z", "s", "sdg", "t", "tdg", "sx", "sy", "rx", "ry", "rz"}
)
TWO_QUBIT_GATES = frozenset({"cx", "cz", "cp", "swap", "rzz", "iswap"})

GATE_ARITY = {name: 1 for name in ONE_QUBIT_GATES}
GATE_ARITY.update({name: 2 for name in TWO_QUBIT_GATES})


class CircuitError(ValueError):
    """Invalid circuit construction (bad qubit index, repeated qubit, ...)."""


class CircuitParseError(CircuitError):
    """Text that does not conform to the circuit line format."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Gate:
    """One operation: creation-ordered id, symbolic name, qubits, real params."""

    id: int
    name: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``num_qubits`` dense wire indices."""

    num_qubits: int
    gates: tuple[Gate, ...]

    @classmethod
    def from_ops(
        cls, num_qubits: int, ops: Iterable[tuple[str, tuple[int, ...], tuple[float, ...]]]
    ) -> "Circuit":
        """Build a circuit from (name, qubits, params) triples, assigning ids 0.. in order."""
        if num_qubits < 1:
            raise CircuitError(f"num_qubits must be positive, got {num_qubits}")
        gates = []
        for gate_id, (name, qubits, params) in enumerate(ops):
            arity = GATE_ARITY.get(name)
            if arity is None:
                raise CircuitError(f"unknown gate name {name!r}")
            if len(qubits) != arity:
                raise CircuitError(f"gate {name!r} expects {arity} qubit(s), got {len(qubits)}")
            if arity == 2 and qubits[0] == qubits[1]:
                raise CircuitError(f"two-qubit gate {name!r} with repeated qubit {qubits[0]}")
            for q in qubits:
                if not 0 <= q < num_qubits:
                    raise CircuitError(f"qubit index {q} out of range for {num_qubits} qubits")
            gates.append(Gate(gate_id, name, tuple(qubits), tuple(float(p) for p in params)))
        return cls(num_qubits, tuple(gates))

    def two_qubit_gates(self) -> list[Gate]:
        return [g for g in self.gates if g.is_two_qubit]

    def used_qubits(self) -> set[int]:
        """Qubits touched by at least one gate of any arity."""
        return {q for g in self.gates for q in g.qubits}

    def coupled_qubits(self) -> set[int]:
        """Qubits touched by at least one two-qubit gate."""
        return {q for g in self.gates if g.is_two_qubit for q in g.qubits}


def parse_circuit(text: str) -> Circuit:
    """Parse the line format: ``qubits <n>`` then ``<name> <q0> [<q1>] [<param>...]``.

    ``#`` starts a comment; blank lines are skipped. Raises
    :class:`CircuitParseError` with the offending line number.
    """
    num_qubits = None
    ops = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if num_qubits is None:
            if tokens[0] != "qubits" or len(tokens) != 2:
                raise CircuitParseError("expected header 'qubits <n>'", lineno)
            try:
                num_qubits = int(tokens[1])
            except ValueError:
                raise CircuitParseError(f"qubit count {tokens[1]!r} is not an integer", lineno)
            if num_qubits < 1:
                raise CircuitParseError(f"qubit count must be positive, got {num_qubits}", lineno)
            continue
        name = tokens[0]
        arity = GATE_ARITY.get(name)
        if arity is None:
            raise CircuitParseError(f"unknown gate name {name!r}", lineno)
        if len(tokens) < 1 + arity:
            raise CircuitParseError(f"gate {name!r} needs {arity} qubit argument(s)", lineno)
        try:
            qubits = tuple(int(t) for t in tokens[1 : 1 + arity])
        except ValueError:
            raise CircuitParseError(f"malformed qubit index in {line!r}", lineno)
        try:
            params = tuple(float(t) for t in tokens[1 + arity :])
        except ValueError:
            raise CircuitParseError(f"malformed parameter in {line!r}", lineno)
        for q in qubits:
            if not 0 <= q < num_qubits:
                raise CircuitParseError(f"qubit index {q} out of range (qubits {num_qubits})", lineno)
        if arity == 2 and qubits[0] == qubits[1]:
            raise CircuitParseError(f"two-qubit gate {name!r} with repeated qubit {qubits[0]}", lineno)
        ops.append((name, qubits, params))
    if num_qubits is None:
        raise CircuitParseError("empty input: missing 'qubits <n>' header", 1)
    return Circuit.from_ops(num_qubits, ops)


def serialize_circuit(circuit: Circuit) -> str:
    """Render a circuit in the text format; parses back to an equal circuit."""
    lines = [f"qubits {circuit.num_qubits}"]
    for g in circuit.gates:
        parts = [g.name, *[str(q) for q in g.qubits], *[repr(p) for p in g.params]]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


# DAG node tags: ("in", qubit), ("gate", gate id), ("out", qubit).
DagNode = tuple[str, int]


@dataclass(frozen=True)
class CircuitDag:
    """Wire-level DAG: per qubit, a directed path input -> gates -> output."""

    circuit: Circuit
    wire_gates: dict[int, tuple[int, ...]]  # qubit -> ids of gates touching it, program order

    @property
    def nodes(self) -> list[DagNode]:
        ins = [("in", q) for q in range(self.circuit.num_qubits)]
        outs = [("out", q) for q in range(self.circuit.num_qubits)]
        gates = [("gate", g.id) for g in self.circuit.gates]
        return ins + gates + outs

    def edges(self) -> Iterator[tuple[DagNode, DagNode, int]]:
        """Yield (src, dst, qubit) wire segments."""
        for q in range(self.circuit.num_qubits):
            path: list[DagNode] = [("in", q)]
            path.extend(("gate", gid) for gid in self.wire_gates[q])
            path.append(("out", q))
            for src, dst in zip(path, path[1:]):
                yield src, dst, q


def build_dag(circuit: Circuit) -> CircuitDag:
    """Link consecutive operations on each qubit, bracketed by input/output nodes."""
    wires: dict[int, list[int]] = {q: [] for q in range(circuit.num_qubits)}
    for g in circuit.gates:
        for q in g.qubits:
            wires[q].append(g.id)
    return CircuitDag(circuit, {q: tuple(gids) for q, gids in wires.items()})
