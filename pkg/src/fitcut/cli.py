"""Command-line front end: generate circuits, cut them, benchmark, query oracles."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .circuit import CircuitError, parse_circuit, serialize_circuit
from .cutplan import subcircuit_to_text
from .gategraph import graph_to_dot, graph_to_json, to_gate_graph
from .circuit import build_dag
from .generators import gen_adder, gen_bv, gen_hwea, gen_supremacy
from .oracle import brute_balanced_schedule, brute_max_modularity, brute_min_cuts
from .pipeline import cut_circuit, modularity_only_plan, plan_to_json
from .scheduling import UnschedulableError, Worker, WorkerPool

ENV_POOL = "FITCUT_WORKERS"


def load_worker_pool(path: str) -> WorkerPool:
    """Pool file: JSON list of capacities, list of {id, capacity}, or {"workers": [...]}."""
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = data.get("workers")
    if not isinstance(data, list) or not data:
        raise ValueError(f"worker pool file {path} must contain a non-empty list")
    if all(isinstance(item, int) for item in data):
        return WorkerPool.of_capacities(data)
    workers = tuple(Worker(int(item["id"]), int(item["capacity"])) for item in data)
    return WorkerPool(workers)


def _expand_secret(secret: str, n: int) -> str:
    if secret == "ones":
        return "1" * (n - 1)
    if secret == "zeros":
        return "0" * (n - 1)
    return secret


def _build_circuit_from_args(args) -> "Circuit":
    if getattr(args, "circuit", None):
        return parse_circuit(Path(args.circuit).read_text())
    kind = args.gen
    if kind == "bv":
        return gen_bv(args.qubits, _expand_secret(args.secret, args.qubits))
    if kind == "adder":
        return gen_adder(args.qubits)
    if kind == "hwea":
        return gen_hwea(args.qubits, args.layers)
    if kind == "supremacy":
        return gen_supremacy(args.rows, args.cols, args.depth, args.seed)
    raise CircuitError(f"unknown generator {kind!r}")


def _add_gen_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--qubits", type=int, help="qubit count (bv, adder, hwea)")
    p.add_argument("--secret", default="ones", help="bv secret: bitstring, 'ones' or 'zeros'")
    p.add_argument("--layers", type=int, default=1, help="hwea layer count")
    p.add_argument("--rows", type=int, help="supremacy grid rows")
    p.add_argument("--cols", type=int, help="supremacy grid cols")
    p.add_argument("--depth", type=int, default=8, help="supremacy entangling layers")


def cmd_gen(args) -> int:
    circuit = _build_circuit_from_args(args)
    text = serialize_circuit(circuit)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_cut(args) -> int:
    circuit = _build_circuit_from_args(args)
    pool_path = args.workers or os.environ.get(ENV_POOL)
    if not pool_path:
        raise ValueError(f"no worker pool: pass --workers or set {ENV_POOL}")
    pool = load_worker_pool(pool_path)

    if args.dump_graph:
        graph = to_gate_graph(build_dag(circuit))
        Path(args.dump_graph + ".json").write_text(graph_to_json(graph))
        Path(args.dump_graph + ".dot").write_text(graph_to_dot(graph))

    if args.baseline:
        plan = modularity_only_plan(circuit, pool, args.seed)
        payload = plan_to_json(plan)
        summary_line = (
            f"baseline (modularity-only): nc {plan.objectives.nc} ru {plan.objectives.ru} "
            f"system utilization {plan.utilization.system_utilization:.3f}"
        )
    else:
        result = cut_circuit(circuit, pool, seed=args.seed, runs=args.runs, jobs=args.jobs)
        plan = result.best
        payload = plan_to_json(plan, summary=result.summary())
        s = result.summary()
        summary_line = (
            f"runs {s['runs']}: nc min {s['nc_min']} median {s['nc_median']} max {s['nc_max']}; "
            f"best seed {s['best_seed']} (nc {s['best_nc']}, ru {s['best_ru']}); "
            f"mean cut-search time {result.mean_seconds():.4f} s"
        )

    if args.output:
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)
    print(summary_line, file=sys.stderr)

    if args.emit_subcircuits:
        outdir = Path(args.emit_subcircuits)
        outdir.mkdir(parents=True, exist_ok=True)
        for sub in plan.subcircuits:
            (outdir / f"subcircuit_{sub.id}.txt").write_text(subcircuit_to_text(circuit, sub))
    return 0


def _bench_rows(suite: dict, default_runs: int, jobs: int) -> tuple[list[dict], dict]:
    rows = []
    plot_data = {}
    runs = int(suite.get("runs", default_runs))
    for case in suite.get("cases", []):
        name = case["name"]
        spec = case["circuit"]
        if "file" in spec:
            circuit = parse_circuit(Path(spec["file"]).read_text())
        else:
            ns = argparse.Namespace(
                circuit=None,
                gen=spec["gen"],
                qubits=spec.get("qubits"),
                secret=spec.get("secret", "ones"),
                layers=spec.get("layers", 1),
                rows=spec.get("rows"),
                cols=spec.get("cols"),
                depth=spec.get("depth", 8),
                seed=spec.get("seed", 0),
            )
            circuit = _build_circuit_from_args(ns)
        workers = case["workers"]
        pool = load_worker_pool(workers) if isinstance(workers, str) else (
            WorkerPool.of_capacities(workers)
            if all(isinstance(w, int) for w in workers)
            else WorkerPool(tuple(Worker(int(w["id"]), int(w["capacity"])) for w in workers))
        )
        result = cut_circuit(circuit, pool, seed=int(case.get("seed", 0)), runs=runs, jobs=jobs)
        s = result.summary()
        rows.append(
            {
                "name": name,
                "qubits": circuit.num_qubits,
                "gates": len(circuit.gates),
                "two_qubit_gates": len(circuit.two_qubit_gates()),
                "runs": s["runs"],
                "nc_min": s["nc_min"],
                "nc_median": s["nc_median"],
                "nc_max": s["nc_max"],
                "ru_best": s["best_ru"],
                "system_utilization": result.best.utilization.system_utilization,
                "mean_seconds": result.mean_seconds(),
            }
        )
        plot_data[name] = {
            "nc": result.nc_values(),
            "seconds": [r.seconds for r in result.runs],
        }
    return rows, plot_data


_BENCH_COLUMNS = [
    "name", "qubits", "gates", "two_qubit_gates", "runs", "nc_min", "nc_median",
    "nc_max", "ru_best", "system_utilization", "mean_seconds",
]


def cmd_bench(args) -> int:
    suite = json.loads(Path(args.suite).read_text())
    rows, plot_data = _bench_rows(suite, args.runs, args.jobs)
    if args.format == "json":
        payload = json.dumps(rows, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_BENCH_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
        payload = buf.getvalue()
    if args.output:
        Path(args.output).write_text(payload)
    else:
        sys.stdout.write(payload)
    if args.plot_data:
        Path(args.plot_data).write_text(json.dumps(plot_data, indent=2) + "\n")
    return 0


def cmd_oracle(args) -> int:
    if args.oracle_kind == "min-cuts":
        circuit = parse_circuit(Path(args.circuit).read_text())
        graph = to_gate_graph(build_dag(circuit))
        res = brute_min_cuts(graph, args.cap)
        print(json.dumps({"min_cuts": res.optimum, "partition": {str(k): v for k, v in sorted(res.witness.items())}}))
    elif args.oracle_kind == "max-modularity":
        circuit = parse_circuit(Path(args.circuit).read_text())
        graph = to_gate_graph(build_dag(circuit))
        res = brute_max_modularity(graph)
        print(json.dumps({"max_modularity": res.optimum, "partition": {str(k): v for k, v in sorted(res.witness.items())}}))
    else:
        pool = load_worker_pool(args.workers)
        res = brute_balanced_schedule(pool, args.widths)
        print(json.dumps({"min_ru": res.optimum, "assignment": {str(k): v for k, v in sorted(res.witness.items())}}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fitcut", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a benchmark circuit file")
    p_gen.add_argument("gen", choices=["bv", "adder", "hwea", "supremacy"])
    _add_gen_flags(p_gen)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output")
    p_gen.set_defaults(func=cmd_gen)

    p_cut = sub.add_parser("cut", help="cut a circuit for a worker pool")
    src = p_cut.add_mutually_exclusive_group(required=True)
    src.add_argument("--circuit", help="circuit file in the text format")
    src.add_argument("--gen", choices=["bv", "adder", "hwea", "supremacy"])
    _add_gen_flags(p_cut)
    p_cut.add_argument("--workers", help=f"worker pool JSON (default ${ENV_POOL})")
    p_cut.add_argument("--seed", type=int, default=0)
    p_cut.add_argument("--runs", type=int, default=1)
    p_cut.add_argument("--jobs", type=int, default=1)
    p_cut.add_argument("-o", "--output", help="write the best plan JSON here")
    p_cut.add_argument("--dump-graph", help="write gate graph to PREFIX.json and PREFIX.dot")
    p_cut.add_argument("--emit-subcircuits", help="write each subcircuit as a text circuit in DIR")
    p_cut.add_argument("--baseline", action="store_true",
                       help="modularity-only plan (skip merge optimization)")
    p_cut.set_defaults(func=cmd_cut)

    p_bench = sub.add_parser("bench", help="run a suite of (circuit, pool) cases")
    p_bench.add_argument("--suite", required=True, help="suite JSON file")
    p_bench.add_argument("--runs", type=int, default=50, help="runs per case unless the suite says")
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.add_argument("--format", choices=["csv", "json"], default="csv")
    p_bench.add_argument("-o", "--output")
    p_bench.add_argument("--plot-data", help="write per-run nc/time arrays as JSON")
    p_bench.set_defaults(func=cmd_bench)

    p_oracle = sub.add_parser("oracle", help="exhaustive reference solvers (small instances)")
    osub = p_oracle.add_subparsers(dest="oracle_kind", required=True)
    o_cuts = osub.add_parser("min-cuts")
    o_cuts.add_argument("--circuit", required=True)
    o_cuts.add_argument("--cap", type=int, required=True)
    o_mod = osub.add_parser("max-modularity")
    o_mod.add_argument("--circuit", required=True)
    o_sched = osub.add_parser("schedule")
    o_sched.add_argument("--workers", required=True)
    o_sched.add_argument("--widths", type=int, nargs="+", required=True)
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CircuitError, UnschedulableError, ValueError, OSError, KeyError) as exc:
        print(f"fitcut: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
