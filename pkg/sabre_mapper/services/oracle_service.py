"""
Exhaustive minimum-SWAP oracle for tiny instances.

States are (placement of the logical qubits, set of executed two-qubit
gates). Every state greedily executes whatever became executable, so only
SWAPs cost anything and a breadth-first search over SWAP count returns the
optimum.
"""
import logging
from collections import deque
from itertools import permutations
from typing import Iterable, List, Optional, Tuple

from sabre_mapper.config import Config
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.coupling_graph import CouplingGraph
from sabre_mapper.models.gate_dag import build_dag
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.validate.exceptions import MappingError, OracleLimitError

logger = logging.getLogger(__name__)

Placement = Tuple[int, ...]


def _check_limits(circuit: Circuit, device: CouplingGraph, two_qubit_gates: int) -> None:
    if circuit.num_qubits > Config.ORACLE_MAX_LOGICAL:
        raise OracleLimitError(
            f"Oracle handles at most {Config.ORACLE_MAX_LOGICAL} logical qubits, got {circuit.num_qubits}."
        )
    if device.num_physical_qubits > Config.ORACLE_MAX_PHYSICAL:
        raise OracleLimitError(
            f"Oracle handles at most {Config.ORACLE_MAX_PHYSICAL} physical qubits, "
            f"got {device.num_physical_qubits}."
        )
    if two_qubit_gates > Config.ORACLE_MAX_TWO_QUBIT_GATES:
        raise OracleLimitError(
            f"Oracle handles at most {Config.ORACLE_MAX_TWO_QUBIT_GATES} two-qubit gates, got {two_qubit_gates}."
        )
    if circuit.num_qubits > device.num_physical_qubits:
        raise MappingError(
            f"Cannot place {circuit.num_qubits} logical qubits on {device.num_physical_qubits} physical qubits."
        )


class _GateTable:
    """Two-qubit gates indexed 0..k-1 with predecessor bitmasks."""

    def __init__(self, circuit: Circuit):
        dag = build_dag(circuit)
        index = {node: i for i, node in enumerate(dag.nodes)}
        self.operands: List[Tuple[int, int]] = [dag.operands[node] for node in dag.nodes]
        self.pred_masks: List[int] = []
        for node in dag.nodes:
            mask = 0
            for pred in dag.predecessors[node]:
                mask |= 1 << index[pred]
            self.pred_masks.append(mask)
        self.full = (1 << len(self.operands)) - 1

    def close(self, placement: Placement, executed: int, device: CouplingGraph) -> int:
        """Executes every reachable gate without moving qubits."""
        progress = True
        while progress:
            progress = False
            for i, (a, b) in enumerate(self.operands):
                bit = 1 << i
                if executed & bit or (self.pred_masks[i] & executed) != self.pred_masks[i]:
                    continue
                if device.has_edge(placement[a], placement[b]):
                    executed |= bit
                    progress = True
        return executed


def _successors(placement: Placement, edges: Iterable[Tuple[int, int]], num_physical: int):
    occupant = [-1] * num_physical
    for q, p in enumerate(placement):
        occupant[p] = q
    for pa, pb in edges:
        qa, qb = occupant[pa], occupant[pb]
        if qa < 0 and qb < 0:
            continue
        moved = list(placement)
        if qa >= 0:
            moved[qa] = pb
        if qb >= 0:
            moved[qb] = pa
        yield tuple(moved)


def optimal_swap_count(
    circuit: Circuit, device: CouplingGraph, initial_mapping: Optional[Mapping] = None
) -> int:
    """
    Minimum number of SWAPs that makes every two-qubit gate of `circuit`
    executable on `device`.

    Args:
        circuit: Program with at most ORACLE_MAX_LOGICAL qubits and
            ORACLE_MAX_TWO_QUBIT_GATES two-qubit gates.
        device: Connected device with at most ORACLE_MAX_PHYSICAL qubits.
        initial_mapping: Fixed start placement. When omitted, every injection
            of the logical qubits is a zero-cost start state.

    Returns:
        The optimal SWAP count.
    """
    table = _GateTable(circuit)
    _check_limits(circuit, device, len(table.operands))
    # Raises DisconnectedDeviceError for split devices.
    _ = device.distances

    n, num_physical = circuit.num_qubits, device.num_physical_qubits
    if initial_mapping is not None:
        if initial_mapping.num_logical != n or initial_mapping.num_physical != num_physical:
            raise MappingError("Initial mapping does not match the circuit and device sizes.")
        starts = [tuple(initial_mapping.forward)]
    else:
        starts = list(permutations(range(num_physical), n))

    edges = device.sorted_edges()
    frontier = deque()
    seen = set()
    for placement in starts:
        state = (placement, table.close(placement, 0, device))
        if state[1] == table.full:
            return 0
        if state not in seen:
            seen.add(state)
            frontier.append((state, 0))

    while frontier:
        (placement, executed), cost = frontier.popleft()
        for moved in _successors(placement, edges, num_physical):
            state = (moved, table.close(moved, executed, device))
            if state[1] == table.full:
                logger.debug(f"Oracle optimum {cost + 1} after {len(seen)} state(s).")
                return cost + 1
            if state not in seen:
                seen.add(state)
                frontier.append((state, cost + 1))

    raise OracleLimitError("Search space exhausted without a solution.")
