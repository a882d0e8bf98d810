"""Deterministic benchmark-circuit generators.

All generators emit only one- and two-qubit gates; anything wider (the adder's
Toffolis) is decomposed before emission, since the downstream graph model is
strictly two-qubit.
"""
from __future__ import annotations

import math
import random
import warnings

from .circuit import Circuit, CircuitError


def gen_bv(n: int, secret: str) -> Circuit:
    """Hidden-bitstring query circuit: n-1 data qubits, one ancilla, one cx per set bit."""
    if n < 2:
        raise CircuitError(f"bv needs at least 2 qubits, got {n}")
    if len(secret) != n - 1 or any(ch not in "01" for ch in secret):
        raise CircuitError(f"secret must be a bitstring of length {n - 1}, got {secret!r}")
    anc = n - 1
    ops: list[tuple[str, tuple[int, ...], tuple[float, ...]]] = []
    for q in range(n - 1):
        ops.append(("h", (q,), ()))
    ops.append(("x", (anc,), ()))
    ops.append(("h", (anc,), ()))
    for q, bit in enumerate(secret):
        if bit == "1":
            ops.append(("cx", (q, anc), ()))
    for q in range(n - 1):
        ops.append(("h", (q,), ()))
    return Circuit.from_ops(n, ops)


def _ccx(a: int, b: int, t: int) -> list[tuple[str, tuple[int, ...], tuple[float, ...]]]:
    """Standard six-cx Toffoli decomposition with controls a, b and target t."""
    return [
        ("h", (t,), ()),
        ("cx", (b, t), ()),
        ("tdg", (t,), ()),
        ("cx", (a, t), ()),
        ("t", (t,), ()),
        ("cx", (b, t), ()),
        ("tdg", (t,), ()),
        ("cx", (a, t), ()),
        ("t", (b,), ()),
        ("t", (t,), ()),
        ("h", (t,), ()),
        ("cx", (a, b), ()),
        ("t", (a,), ()),
        ("tdg", (b,), ()),
        ("cx", (a, b), ()),
    ]


def _maj(c: int, b: int, a: int):
    ops = [("cx", (a, b), ()), ("cx", (a, c), ())]
    ops.extend(_ccx(c, b, a))
    return ops


def _uma(c: int, b: int, a: int):
    # Three-cx unmajority-and-add block (plus the Toffoli's six).
    ops = [("x", (b,), ()), ("cx", (c, b), ())]
    ops.extend(_ccx(c, b, a))
    ops.extend([("x", (b,), ()), ("cx", (a, c), ()), ("cx", (a, b), ())])
    return ops


def adder_two_qubit_gate_count(n: int) -> int:
    """Reference constant: the ripple adder on n qubits has 17*(n/2 - 1) + 1 cx-class gates."""
    return 17 * (n // 2 - 1) + 1


def gen_adder(n: int) -> Circuit:
    """Ripple-carry adder on two (n/2 - 1)-bit registers, a carry-in ancilla and a carry-out.

    Layout: qubit 0 is the carry-in; bit i of the two registers sits on qubits
    1 + 2i and 2 + 2i; qubit n-1 is the carry-out. The chain applies one
    majority block per bit, copies the carry, then unwinds with unmajority
    blocks; Toffolis are decomposed, so every gate has arity <= 2.
    """
    if n < 4 or n % 2 != 0:
        raise CircuitError(f"adder needs an even qubit count >= 4, got {n}")
    bits = n // 2 - 1
    carry_in = 0
    b_reg = [1 + 2 * i for i in range(bits)]
    a_reg = [2 + 2 * i for i in range(bits)]
    carry_out = n - 1
    ops = []
    ops.extend(_maj(carry_in, b_reg[0], a_reg[0]))
    for i in range(1, bits):
        ops.extend(_maj(a_reg[i - 1], b_reg[i], a_reg[i]))
    ops.append(("cx", (a_reg[bits - 1], carry_out), ()))
    for i in range(bits - 1, 0, -1):
        ops.extend(_uma(a_reg[i - 1], b_reg[i], a_reg[i]))
    ops.extend(_uma(carry_in, b_reg[0], a_reg[0]))
    return Circuit.from_ops(n, ops)


def gen_hwea(n: int, layers: int) -> Circuit:
    """Hardware-efficient ansatz: per layer, ry+rz on every qubit then a linear cx chain."""
    if n < 2:
        raise CircuitError(f"hwea needs at least 2 qubits, got {n}")
    if layers < 0:
        raise CircuitError(f"layer count must be non-negative, got {layers}")
    ops = []
    for layer in range(layers):
        for q in range(n):
            theta = ((layer * n + q) % 16 + 1) * math.pi / 16
            ops.append(("ry", (q,), (theta,)))
            ops.append(("rz", (q,), (theta / 2,)))
        for q in range(n - 1):
            ops.append(("cx", (q, q + 1), ()))
    return Circuit.from_ops(n, ops)


_SUPREMACY_SINGLES = ("t", "sx", "sy")
# Eight entangler configurations, cycled by layer: each activates a quarter of
# one orientation's grid edges, staggered between alternating rows/columns.
_SUPREMACY_PATTERNS = (
    ("h", 0), ("v", 0), ("h", 1), ("v", 1), ("h", 2), ("v", 2), ("h", 3), ("v", 3),
)


def gen_supremacy(rows: int, cols: int, depth: int, seed: int) -> Circuit:
    """2-D random circuit on a rows x cols grid, fully determined by the seed.

    Layers cycle through eight sparse cz patterns over the grid edges, with
    seeded random single-qubit gates on every qubit between entangling layers.
    """
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise CircuitError(f"grid must have at least 2 qubits, got {rows}x{cols}")
    if abs(rows - cols) > 2:
        warnings.warn(
            f"grid {rows}x{cols} is far from square; near-square shapes are the intended use",
            stacklevel=2,
        )
    rng = random.Random(seed)
    n = rows * cols
    idx = lambda r, c: r * cols + c
    ops = [("h", (q,), ()) for q in range(n)]
    for layer in range(depth):
        for q in range(n):
            ops.append((rng.choice(_SUPREMACY_SINGLES), (q,), ()))
        orient, k = _SUPREMACY_PATTERNS[layer % len(_SUPREMACY_PATTERNS)]
        if orient == "h":
            for r in range(rows):
                for c in range(cols - 1):
                    if (c + 2 * (r % 2)) % 4 == k:
                        ops.append(("cz", (idx(r, c), idx(r, c + 1)), ()))
        else:
            for r in range(rows - 1):
                for c in range(cols):
                    if (r + 2 * (c % 2)) % 4 == k:
                        ops.append(("cz", (idx(r, c), idx(r + 1, c)), ()))
    return Circuit.from_ops(n, ops)


def random_circuit(
    num_qubits: int, num_gates: int, seed: int, two_qubit_fraction: float = 0.7
) -> Circuit:
    """Seeded fuzz circuit; every qubit ends up touched by at least one gate."""
    if num_qubits < 2:
        raise CircuitError(f"fuzz circuits need at least 2 qubits, got {num_qubits}")
    rng = random.Random(seed)
    ops = []
    touched: set[int] = set()
    for _ in range(num_gates):
        if rng.random() < two_qubit_fraction:
            q0, q1 = rng.sample(range(num_qubits), 2)
            ops.append((rng.choice(("cx", "cz")), (q0, q1), ()))
            touched.update((q0, q1))
        else:
            q = rng.randrange(num_qubits)
            ops.append((rng.choice(("h", "t", "x")), (q,), ()))
            touched.add(q)
    for q in range(num_qubits):
        if q not in touched:
            ops.append(("h", (q,), ()))
    return Circuit.from_ops(num_qubits, ops)
