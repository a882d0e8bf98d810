"""Cut large quantum circuits to fit heterogeneous workers and schedule them well.

The pipeline: a circuit's wire DAG becomes an undirected weighted graph over
its two-qubit gates; qubit-capped community detection finds fine-grained
pieces; a greedy merge optimization grows them into subcircuits that fit the
worker pool while minimizing wire cuts, then idle qubits; a closest-first
scheduler assigns subcircuits to workers; finally concrete cut positions,
materialized subcircuits and a depth-weighted utilization report come out.
"""
from .circuit import (
    Circuit,
    CircuitDag,
    CircuitError,
    CircuitParseError,
    Gate,
    build_dag,
    parse_circuit,
    serialize_circuit,
)
from .community import (
    DetectParams,
    Partition,
    community_modularity,
    community_qubits,
    constrained_louvain,
    modularity,
)
from .cutplan import (
    CutPoint,
    Subcircuit,
    UtilizationReport,
    extract_cuts,
    subcircuit_to_text,
    utilization_report,
)
from .gategraph import GateGraph, to_gate_graph, total_edge_weight
from .generators import gen_adder, gen_bv, gen_hwea, gen_supremacy, random_circuit
from .optimize import GroupAssignment, MergedGraph, build_merged_graph, fitcut_optimize
from .oracle import OracleResult, brute_balanced_schedule, brute_max_modularity, brute_min_cuts
from .pipeline import (
    CutPlan,
    CutSearchResult,
    cut_circuit,
    cut_circuit_once,
    modularity_only_plan,
    plan_to_dict,
    plan_to_json,
)
from .scheduling import (
    ObjectivePair,
    Schedule,
    UnschedulableError,
    Worker,
    WorkerPool,
    closest_first_schedule,
    min_subcircuit_count,
    objectives,
)

__all__ = [
    "Circuit", "CircuitDag", "CircuitError", "CircuitParseError", "Gate",
    "build_dag", "parse_circuit", "serialize_circuit",
    "DetectParams", "Partition", "community_modularity", "community_qubits",
    "constrained_louvain", "modularity",
    "CutPoint", "Subcircuit", "UtilizationReport", "extract_cuts",
    "subcircuit_to_text", "utilization_report",
    "GateGraph", "to_gate_graph", "total_edge_weight",
    "gen_adder", "gen_bv", "gen_hwea", "gen_supremacy", "random_circuit",
    "GroupAssignment", "MergedGraph", "build_merged_graph", "fitcut_optimize",
    "OracleResult", "brute_balanced_schedule", "brute_max_modularity", "brute_min_cuts",
    "CutPlan", "CutSearchResult", "cut_circuit", "cut_circuit_once",
    "modularity_only_plan", "plan_to_dict", "plan_to_json",
    "ObjectivePair", "Schedule", "UnschedulableError", "Worker", "WorkerPool",
    "closest_first_schedule", "min_subcircuit_count", "objectives",
]
