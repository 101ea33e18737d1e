"""
Seeded workload builders for tests and benchmarks.
"""
import random
from typing import List, Optional

from sabre_mapper.constants import SINGLE_QUBIT_GATES
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.coupling_graph import CouplingGraph, build_graph
from sabre_mapper.models.gate import Gate, cnot, single
from sabre_mapper.validate.exceptions import CircuitError, DeviceError

_PLAIN_GATES = sorted(name for name, arity in SINGLE_QUBIT_GATES.items() if arity == 0 and name != "id")


def random_circuit(
    num_qubits: int,
    num_two_qubit: int,
    seed: int = 0,
    single_qubit_ratio: float = 0.0,
) -> Circuit:
    """Uniformly random CNOTs, with single-qubit gates mixed in at `single_qubit_ratio`."""
    if num_two_qubit and num_qubits < 2:
        raise CircuitError("CNOTs need at least two qubits.")
    rng = random.Random(seed)
    gates: List[Gate] = []
    placed = 0
    while placed < num_two_qubit:
        if single_qubit_ratio and rng.random() < single_qubit_ratio:
            gates.append(single(0, rng.choice(_PLAIN_GATES), rng.randrange(num_qubits)))
            continue
        control, target = rng.sample(range(num_qubits), 2)
        gates.append(cnot(0, control, target))
        placed += 1
    return Circuit.from_gates(num_qubits, gates)


def dense_random_circuit(num_qubits: int, layers: int, seed: int = 0) -> Circuit:
    """Layers of a random pairing of all qubits, one CNOT per pair, each followed by a random rotation layer."""
    if num_qubits < 2:
        raise CircuitError("CNOTs need at least two qubits.")
    rng = random.Random(seed)
    gates: List[Gate] = []
    qubits = list(range(num_qubits))
    for _ in range(layers):
        rng.shuffle(qubits)
        for i in range(0, num_qubits - 1, 2):
            gates.append(cnot(0, qubits[i], qubits[i + 1]))
        for q in range(num_qubits):
            if rng.random() < 0.5:
                gates.append(single(0, rng.choice(_PLAIN_GATES), q))
    return Circuit.from_gates(num_qubits, gates)


def qft_pattern(num_qubits: int) -> Circuit:
    """
    QFT gate pattern: a Hadamard per qubit, then one controlled phase per
    later qubit, each decomposed as u1, cx, u1, cx, u1.
    """
    gates: List[Gate] = []
    for i in range(num_qubits):
        gates.append(single(0, "h", i))
        for j in range(i + 1, num_qubits):
            half = f"pi/{2 ** (j - i + 1)}"
            gates.append(single(0, "u1", i, (half,)))
            gates.append(cnot(0, i, j))
            gates.append(single(0, "u1", j, (f"-{half}",)))
            gates.append(cnot(0, i, j))
            gates.append(single(0, "u1", j, (half,)))
    return Circuit.from_gates(num_qubits, gates)


def ising_chain(num_qubits: int, steps: int, angle: str = "0.1") -> Circuit:
    """Trotterized nearest-neighbour Ising evolution: only line-adjacent CNOTs."""
    gates: List[Gate] = []
    for _ in range(steps):
        for q in range(num_qubits):
            gates.append(single(0, "rx", q, (angle,)))
        for q in range(num_qubits - 1):
            gates.append(cnot(0, q, q + 1))
            gates.append(single(0, "rz", q + 1, (angle,)))
            gates.append(cnot(0, q, q + 1))
    return Circuit.from_gates(num_qubits, gates)


def random_connected_graph(
    num_qubits: int, seed: int = 0, extra_edges: Optional[int] = None
) -> CouplingGraph:
    """Random spanning tree plus `extra_edges` random couplers (default about N/2)."""
    if num_qubits < 1:
        raise DeviceError("A device needs at least one physical qubit.")
    rng = random.Random(seed)
    order = list(range(num_qubits))
    rng.shuffle(order)
    edges = set()
    for i in range(1, num_qubits):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    possible = num_qubits * (num_qubits - 1) // 2
    wanted = min(possible, len(edges) + (num_qubits // 2 if extra_edges is None else extra_edges))
    while len(edges) < wanted:
        a, b = rng.sample(range(num_qubits), 2)
        edges.add((min(a, b), max(a, b)))
    return build_graph(num_qubits, sorted(edges), name=f"random{num_qubits}-{seed}")
