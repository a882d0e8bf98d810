"""Transform the wire DAG into an undirected weighted graph over two-qubit gates.

One-qubit gates are spliced out; vertices are two-qubit gates; an edge of
weight 1 or 2 joins gates that are adjacent on one or both wires.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .circuit import CircuitDag


@dataclass(frozen=True)
class GateGraph:
    vertices: tuple[int, ...]  # two-qubit gate ids, ascending
    edges: dict[tuple[int, int], int]  # unordered pair (i < j) -> weight in {1, 2}
    vertex_qubits: dict[int, tuple[int, int]]
    adj: dict[int, dict[int, int]] = field(repr=False)

    @classmethod
    def build(
        cls,
        vertices: tuple[int, ...],
        edges: dict[tuple[int, int], int],
        vertex_qubits: dict[int, tuple[int, int]],
    ) -> "GateGraph":
        adj: dict[int, dict[int, int]] = {v: {} for v in vertices}
        for (i, j), w in edges.items():
            adj[i][j] = w
            adj[j][i] = w
        return cls(vertices, edges, vertex_qubits, adj)

    def degree(self, v: int) -> int:
        """Weighted degree: sum of incident edge weights."""
        return sum(self.adj[v].values())

    def qubit_count(self) -> int:
        """Distinct qubits touched by the graph's gates."""
        return len({q for pair in self.vertex_qubits.values() for q in pair})


def to_gate_graph(dag: CircuitDag) -> GateGraph:
    """Splice out one-qubit gates and join wire-adjacent two-qubit gates.

    Gates adjacent on both of their qubits get a single weight-2 edge. A
    circuit with no two-qubit gates yields the empty graph; two-qubit gates
    with no two-qubit neighbors stay as degree-0 vertices.
    """
    circuit = dag.circuit
    twoq = {g.id: g for g in circuit.gates if g.is_two_qubit}
    edges: dict[tuple[int, int], int] = {}
    for q in range(circuit.num_qubits):
        chain = [gid for gid in dag.wire_gates[q] if gid in twoq]
        for a, b in zip(chain, chain[1:]):
            key = (a, b) if a < b else (b, a)
            edges[key] = edges.get(key, 0) + 1
    vertex_qubits = {gid: (g.qubits[0], g.qubits[1]) for gid, g in twoq.items()}
    return GateGraph.build(tuple(sorted(twoq)), edges, vertex_qubits)


def total_edge_weight(graph: GateGraph) -> int:
    """m in the modularity formulas: the sum of all edge weights."""
    return sum(graph.edges.values())


def graph_to_json(graph: GateGraph) -> str:
    payload = {
        "vertices": list(graph.vertices),
        "edges": sorted([i, j, w] for (i, j), w in graph.edges.items()),
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_to_dot(graph: GateGraph, labels: dict[int, str] | None = None) -> str:
    """Render as Graphviz DOT; edge weight shown as label, weight-2 drawn bold."""
    lines = ["graph gategraph {", "  node [shape=circle];"]
    for v in graph.vertices:
        label = labels.get(v, str(v)) if labels else str(v)
        lines.append(f'  v{v} [label="{label}"];')
    for (i, j), w in sorted(graph.edges.items()):
        style = ' style=bold' if w == 2 else ""
        lines.append(f'  v{i} -- v{j} [label="{w}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
