import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from sabre_mapper.constants import GateKind, SWAP_CNOT_COST
from sabre_mapper.models.gate import Gate, cnot
from sabre_mapper.validate.exceptions import CircuitError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GateCounts:
    cnot: int = 0
    swap: int = 0
    single: int = 0
    measure: int = 0

    @property
    def two_qubit(self) -> int:
        return self.cnot + self.swap

    @property
    def total(self) -> int:
        return self.cnot + self.swap + self.single + self.measure

    def to_dict(self) -> Dict[str, int]:
        return {
            "CNOT": self.cnot,
            "SWAP": self.swap,
            "SINGLE": self.single,
            "MEASURE": self.measure,
            "total": self.total,
        }


@dataclass(frozen=True)
class Circuit:
    """
    Ordered gate list over `num_qubits` logical qubits.
    Immutable; gate ids are dense 0..g-1 in program order.
    """
    num_qubits: int
    gates: Tuple[Gate, ...] = ()
    qreg: str = "q"
    cregs: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.num_qubits < 1:
            raise CircuitError("A circuit needs at least one qubit.")
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "cregs", tuple(tuple(c) for c in self.cregs))
        creg_sizes = dict(self.cregs)
        for position, gate in enumerate(self.gates):
            if gate.id != position:
                raise CircuitError(f"Gate ids must be dense; found id {gate.id} at position {position}.")
            for q in gate.qubits:
                if q >= self.num_qubits:
                    raise CircuitError(
                        f"Gate {gate.id} operand {q} out of range for {self.num_qubits} qubits."
                    )
            if gate.clbit is not None:
                name, index = gate.clbit
                if name not in creg_sizes or not 0 <= index < creg_sizes[name]:
                    raise CircuitError(f"Gate {gate.id} measures into undeclared bit {name}[{index}].")

    @classmethod
    def from_gates(
        cls,
        num_qubits: int,
        gates: Iterable[Gate],
        qreg: str = "q",
        cregs: Tuple[Tuple[str, int], ...] = (),
        keep_origin: bool = True,
    ) -> "Circuit":
        """Builds a circuit, renumbering gate ids densely."""
        renumbered = [
            g.renumbered(i, g.origin if keep_origin else None) for i, g in enumerate(gates)
        ]
        return cls(num_qubits, tuple(renumbered), qreg, cregs)

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def two_qubit_gates(self) -> List[Gate]:
        return [g for g in self.gates if g.is_two_qubit]

    def decompose_swaps(self) -> "Circuit":
        """Replaces every SWAP(a, b) by CNOT(a,b) CNOT(b,a) CNOT(a,b)."""
        out: List[Gate] = []
        for gate in self.gates:
            if gate.kind is GateKind.SWAP:
                a, b = gate.qubits
                out.extend([cnot(0, a, b), cnot(0, b, a), cnot(0, a, b)])
            else:
                out.append(gate)
        return Circuit.from_gates(self.num_qubits, out, self.qreg, self.cregs)

    def structurally_equal(self, other: "Circuit") -> bool:
        """Same register and gate structure, ignoring ids and provenance."""
        return (
            self.num_qubits == other.num_qubits
            and self.cregs == other.cregs
            and len(self.gates) == len(other.gates)
            and all(a.signature() == b.signature() for a, b in zip(self.gates, other.gates))
        )

    def to_dict(self) -> Dict:
        return {
            "num_qubits": self.num_qubits,
            "qreg": self.qreg,
            "cregs": [list(c) for c in self.cregs],
            "gates": [g.to_dict() for g in self.gates],
        }


# --- Circuit-level operations ---

def reverse_circuit(circuit: Circuit) -> Circuit:
    """
    Gate-level reversal: order flipped, operands and parameters untouched.
    Only used to carry a mapping backwards, so gates are not inverted.
    """
    return Circuit.from_gates(
        circuit.num_qubits, reversed(circuit.gates), circuit.qreg, circuit.cregs, keep_origin=False
    )


def expand_source_swaps(circuit: Circuit) -> Circuit:
    """
    Source circuits route SWAP gates as their three CNOTs, so every SWAP in a
    routed circuit is one the router inserted.
    """
    if not any(g.kind is GateKind.SWAP for g in circuit.gates):
        return circuit
    logger.debug("Expanding source SWAP gates into CNOT triples.")
    return circuit.decompose_swaps()


def circuit_depth(circuit: Circuit, decompose_swaps: bool = True) -> int:
    """
    Critical path under unit-latency ASAP scheduling. Every gate takes one
    step; a SWAP takes three when counted in decomposed form.
    """
    level: Dict[int, int] = {}
    depth = 0
    for gate in circuit.gates:
        start = max(level.get(q, 0) for q in gate.qubits)
        cost = SWAP_CNOT_COST if (gate.kind is GateKind.SWAP and decompose_swaps) else 1
        finish = start + cost
        for q in gate.qubits:
            level[q] = finish
        depth = max(depth, finish)
    return depth


def gate_count(circuit: Circuit, decompose_swaps: bool = False) -> GateCounts:
    counts = {kind: 0 for kind in GateKind}
    for gate in circuit.gates:
        counts[gate.kind] += 1
    cnots, swaps = counts[GateKind.CNOT], counts[GateKind.SWAP]
    if decompose_swaps:
        cnots, swaps = cnots + SWAP_CNOT_COST * swaps, 0
    return GateCounts(
        cnot=cnots,
        swap=swaps,
        single=counts[GateKind.SINGLE],
        measure=counts[GateKind.MEASURE],
    )


def qubit_streams(circuit: Circuit) -> List[List[int]]:
    """Per-qubit gate-id sequences in program order."""
    streams: List[List[int]] = [[] for _ in range(circuit.num_qubits)]
    for gate in circuit.gates:
        for q in gate.qubits:
            streams[q].append(gate.id)
    return streams

