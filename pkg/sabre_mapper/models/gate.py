from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional, Tuple

from sabre_mapper.constants import GateKind, SINGLE_QUBIT_GATES, TWO_QUBIT_KINDS
from sabre_mapper.validate.exceptions import CircuitError


@dataclass(frozen=True)
class Gate:
    """
    One operation of a circuit.

    `qubits` are logical indices. `params` holds the literal parameter text
    (e.g. "pi/4") and is never evaluated. `origin` is the id of the source
    gate a routed gate was copied from; routing SWAPs have no origin.
    """
    id: int
    kind: GateKind
    qubits: Tuple[int, ...]
    name: str = ""
    params: Tuple[str, ...] = ()
    clbit: Optional[Tuple[str, int]] = None
    origin: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        arity = 2 if self.kind in TWO_QUBIT_KINDS else 1
        if len(self.qubits) != arity:
            raise CircuitError(
                f"Gate {self.id} ({self.kind.value}) needs {arity} operand(s), got {len(self.qubits)}."
            )
        if any(q < 0 for q in self.qubits):
            raise CircuitError(f"Gate {self.id} has a negative operand.")
        if arity == 2 and self.qubits[0] == self.qubits[1]:
            raise CircuitError(f"Gate {self.id} uses qubit {self.qubits[0]} twice.")
        if self.kind is GateKind.MEASURE and self.clbit is None:
            raise CircuitError(f"Measure gate {self.id} has no classical target.")
        if not self.name:
            object.__setattr__(self, "name", _DEFAULT_NAMES.get(self.kind, ""))

    @property
    def is_two_qubit(self) -> bool:
        return self.kind in TWO_QUBIT_KINDS

    def signature(self) -> Tuple[Any, ...]:
        """Structure of the gate without id or provenance."""
        return (self.kind, self.name, self.qubits, self.params, self.clbit)

    def renumbered(self, new_id: int, origin: Optional[int] = None) -> "Gate":
        return replace(self, id=new_id, origin=origin)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "name": self.name,
            "qubits": list(self.qubits),
            "params": list(self.params),
            "clbit": list(self.clbit) if self.clbit else None,
            "origin": self.origin,
        }


_DEFAULT_NAMES = {
    GateKind.CNOT: "cx",
    GateKind.SWAP: "swap",
    GateKind.MEASURE: "measure",
}


# --- Constructors ---
def cnot(gate_id: int, control: int, target: int, origin: Optional[int] = None) -> Gate:
    return Gate(gate_id, GateKind.CNOT, (control, target), origin=origin)


def swap(gate_id: int, a: int, b: int) -> Gate:
    return Gate(gate_id, GateKind.SWAP, (a, b))


def single(gate_id: int, name: str, qubit: int, params: Tuple[str, ...] = ()) -> Gate:
    expected = SINGLE_QUBIT_GATES.get(name)
    if expected is None:
        raise CircuitError(f"Unknown single-qubit gate '{name}'.")
    if len(params) != expected:
        raise CircuitError(f"Gate '{name}' takes {expected} parameter(s), got {len(params)}.")
    return Gate(gate_id, GateKind.SINGLE, (qubit,), name=name, params=tuple(params))


def measure(gate_id: int, qubit: int, creg: str, index: int) -> Gate:
    return Gate(gate_id, GateKind.MEASURE, (qubit,), clbit=(creg, index))
