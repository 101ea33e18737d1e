"""
Building blocks of one SWAP-search step: executable-gate detection, SWAP
candidate generation, the extended (look-ahead) set, the decay table and
the two cost functions.
"""
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.coupling_graph import CouplingGraph, DistanceMatrix
from sabre_mapper.models.gate_dag import GateDag
from sabre_mapper.models.mapping import Mapping, VACANT

Edge = Tuple[int, int]
OperandSource = Union[Circuit, GateDag]


def _pair(source: OperandSource, gate_id: int) -> Tuple[int, int]:
    if isinstance(source, GateDag):
        return source.operands[gate_id]
    return source.gates[gate_id].qubits


class DecayTable:
    """Per-logical-qubit penalty. Entries start at 1.0 and grow by delta per selected SWAP."""

    __slots__ = ("values", "steps_since_reset", "reset_interval")

    def __init__(self, num_qubits: int, reset_interval: int = 5):
        self.values: List[float] = [1.0] * num_qubits
        self.steps_since_reset = 0
        self.reset_interval = reset_interval

    def reset(self) -> None:
        for i in range(len(self.values)):
            self.values[i] = 1.0
        self.steps_since_reset = 0

    def bump(self, qa: int, qb: int, delta: float) -> None:
        for q in (qa, qb):
            if q != VACANT:
                self.values[q] += delta

    def tick(self) -> None:
        """Counts one search step; resets every `reset_interval` steps."""
        self.steps_since_reset += 1
        if self.steps_since_reset >= self.reset_interval:
            self.reset()

    def factor(self, qa: int, qb: int) -> float:
        a = self.values[qa] if qa != VACANT else 1.0
        b = self.values[qb] if qb != VACANT else 1.0
        return a if a > b else b


def executable_gates(
    front: Iterable[int], mapping: Mapping, graph: CouplingGraph, source: OperandSource
) -> List[int]:
    """Front-layer gates whose mapped operands are coupled, ascending by id."""
    forward = mapping.forward
    ready = []
    for gate_id in sorted(front):
        a, b = _pair(source, gate_id)
        if graph.has_edge(forward[a], forward[b]):
            ready.append(gate_id)
    return ready


def obtain_swaps(
    front: Iterable[int], mapping: Mapping, graph: CouplingGraph, source: OperandSource
) -> List[Edge]:
    """Physical edges with at least one endpoint hosting a front-layer qubit."""
    forward = mapping.forward
    candidates = set()
    for gate_id in front:
        for q in _pair(source, gate_id):
            p = forward[q]
            for nb in graph.adjacency[p]:
                candidates.add((p, nb) if p < nb else (nb, p))
    return sorted(candidates)


def compute_extended_set(dag: GateDag, front: Iterable[int], size: int) -> Tuple[int, ...]:
    """Breadth-first DAG successors of the front layer, ascending id per layer, capped at `size`."""
    if size <= 0:
        return ()
    layer = sorted(front)
    visited = set(layer)
    collected: List[int] = []
    while layer and len(collected) < size:
        successors = sorted({s for g in layer for s in dag.successors[g] if s not in visited})
        for s in successors:
            visited.add(s)
            collected.append(s)
            if len(collected) == size:
                break
        layer = successors
    return tuple(collected)


def h_basic(
    front: Iterable[int], mapping: Mapping, distances: DistanceMatrix, source: OperandSource
) -> int:
    """Sum of mapped distances over the front layer."""
    forward = mapping.forward
    rows = distances.rows
    total = 0
    for gate_id in front:
        a, b = _pair(source, gate_id)
        total += rows[forward[a]][forward[b]]
    return total


def h_full(
    swap: Edge,
    front: Sequence[int],
    extended: Sequence[int],
    mapping: Mapping,
    distances: DistanceMatrix,
    decay: Optional[DecayTable],
    weight: float,
    source: OperandSource,
) -> float:
    """
    Look-ahead cost of `swap`, scored on the mapping with `swap` applied:

        max(decay(qa), decay(qb)) * (mean_F D + W * mean_E D)

    The E term is dropped when E is empty. `decay=None` scores with all
    factors at 1.
    """
    pa, pb = swap
    forward = mapping.forward
    inverse = mapping.inverse
    qa, qb = inverse[pa], inverse[pb]
    rows = distances.rows

    def placed(q: int) -> int:
        if q == qa:
            return pb
        if q == qb:
            return pa
        return forward[q]

    front_cost = 0
    for gate_id in front:
        a, b = _pair(source, gate_id)
        front_cost += rows[placed(a)][placed(b)]
    cost = front_cost / len(front)

    if extended and weight:
        extended_cost = 0
        for gate_id in extended:
            a, b = _pair(source, gate_id)
            extended_cost += rows[placed(a)][placed(b)]
        cost += weight * extended_cost / len(extended)

    if decay is not None:
        cost *= decay.factor(qa, qb)
    return cost
