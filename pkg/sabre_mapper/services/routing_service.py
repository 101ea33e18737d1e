import logging
import random
import time
from typing import Dict, List, Optional, Set, Tuple

from sabre_mapper.constants import HeuristicKind, SWAP_CNOT_COST, TIE_TOLERANCE
from sabre_mapper.models.circuit import Circuit, circuit_depth, expand_source_swaps, qubit_streams
from sabre_mapper.models.coupling_graph import CouplingGraph, shortest_path
from sabre_mapper.models.gate import Gate, swap as swap_gate
from sabre_mapper.models.gate_dag import build_dag, initial_front_layer
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.models.routed_circuit import RoutedCircuit
from sabre_mapper.services.heuristics import (
    DecayTable,
    Edge,
    compute_extended_set,
    executable_gates,
    h_basic,
    h_full,
    obtain_swaps,
)
from sabre_mapper.validate.exceptions import MappingError, RoutingError
from sabre_mapper.validate.schemas import RouterParams, RoutingStats

logger = logging.getLogger(__name__)


class SabreRouter:
    """
    One traversal of the SWAP-based heuristic search.

    The router works on N wires: the program's logical qubits plus one
    placeholder per vacant physical slot, so every SWAP names two wires.
    Instances are single-use; call `run()` once.
    """

    def __init__(
        self,
        circuit: Circuit,
        device: CouplingGraph,
        initial_mapping: Mapping,
        params: RouterParams,
        seed: int = 0,
    ):
        circuit = expand_source_swaps(circuit)
        n, num_physical = circuit.num_qubits, device.num_physical_qubits
        if n > num_physical:
            raise RoutingError(
                f"Circuit uses {n} qubits but device '{device.name}' only has {num_physical}."
            )
        if initial_mapping.num_logical != n or initial_mapping.num_physical != num_physical:
            raise MappingError(
                f"Initial mapping places {initial_mapping.num_logical} qubits on "
                f"{initial_mapping.num_physical}; expected {n} on {num_physical}."
            )
        self.circuit = circuit
        self.device = device
        self.params = params
        self.seed = seed
        self.initial_mapping = initial_mapping
        self.distances = device.distances
        self.dag = build_dag(circuit)
        self.rng = random.Random(seed)

        self.mapping = initial_mapping.padded()
        self.front: Set[int] = set(initial_front_layer(self.dag))
        self.remaining: Dict[int, int] = dict(self.dag.indegree)
        self.decay = DecayTable(num_physical, params.decay_reset_interval)
        self.streams = qubit_streams(circuit)
        self.heads = [0] * n

        self.output: List[Gate] = []
        self.swap_edges: List[Edge] = []
        self.search_steps = 0
        self.forced_swaps = 0
        self._extended: Optional[Tuple[int, ...]] = None

    # --- Emission ---
    def _emit(self, gate: Gate) -> None:
        self.output.append(gate.renumbered(len(self.output), origin=gate.id))

    def _flush_singles(self, qubits) -> None:
        """Emits single-qubit and measure gates whose per-qubit predecessors are out."""
        gates = self.circuit.gates
        for q in qubits:
            stream = self.streams[q]
            while self.heads[q] < len(stream) and not gates[stream[self.heads[q]]].is_two_qubit:
                self._emit(gates[stream[self.heads[q]]])
                self.heads[q] += 1

    def _execute(self, gate_id: int) -> None:
        gate = self.circuit.gates[gate_id]
        self._emit(gate)
        self.front.discard(gate_id)
        for q in gate.qubits:
            self.heads[q] += 1
        self._flush_singles(gate.qubits)
        for succ in self.dag.successors[gate_id]:
            self.remaining[succ] -= 1
            if self.remaining[succ] == 0:
                self.front.add(succ)

    def _apply_swap(self, edge: Edge) -> None:
        pa, pb = edge
        wa, wb = self.mapping.inverse[pa], self.mapping.inverse[pb]
        self.output.append(swap_gate(len(self.output), wa, wb))
        self.swap_edges.append(edge)
        self.mapping = self.mapping.apply_swap(edge)

    # --- Search ---
    def _extended_set(self) -> Tuple[int, ...]:
        if self._extended is None:
            self._extended = compute_extended_set(self.dag, self.front, self.params.extended_set_size)
        return self._extended

    def _score(self, edge: Edge, front: List[int]) -> float:
        heuristic = self.params.heuristic
        if heuristic is HeuristicKind.BASIC:
            return h_basic(front, self.mapping.apply_swap(edge), self.distances, self.dag)
        decay = self.decay if heuristic is HeuristicKind.DECAY else None
        return h_full(
            edge,
            front,
            self._extended_set(),
            self.mapping,
            self.distances,
            decay,
            self.params.lookahead_weight,
            self.dag,
        )

    def select_swap(self) -> Edge:
        """Scores every candidate and picks the minimum, ties broken by the seeded rng."""
        front = sorted(self.front)
        candidates = obtain_swaps(front, self.mapping, self.device, self.dag)
        scores = [self._score(edge, front) for edge in candidates]
        best = min(scores)
        ties = [edge for edge, score in zip(candidates, scores) if score - best <= TIE_TOLERANCE]
        return ties[0] if len(ties) == 1 else self.rng.choice(ties)

    def _force_progress(self) -> None:
        """Walks the lowest-id front gate's first operand along a shortest path."""
        gate_id = min(self.front)
        a, b = self.dag.operands[gate_id]
        path = shortest_path(self.device, self.mapping.forward[a], self.mapping.forward[b])
        logger.warning(
            f"⚠️ No gate executed for too long; forcing {len(path) - 2} SWAP(s) for gate {gate_id}."
        )
        for i in range(len(path) - 2):
            self._apply_swap((min(path[i], path[i + 1]), max(path[i], path[i + 1])))
            self.forced_swaps += 1
        forward = self.mapping.forward
        if not self.device.has_edge(forward[a], forward[b]):
            raise RoutingError(f"Forced progress failed for gate {gate_id}.", self.front)

    # --- Main loop ---
    def run(self) -> RoutedCircuit:
        start = time.perf_counter()
        delta = self.params.decay_delta
        diameter = max(1, self.distances.diameter)
        idle_steps = 0

        self._flush_singles(range(self.circuit.num_qubits))
        while self.front:
            ready = executable_gates(self.front, self.mapping, self.device, self.dag)
            if ready:
                for gate_id in ready:
                    self._execute(gate_id)
                self.decay.reset()
                self._extended = None
                idle_steps = 0
                continue

            self.search_steps += 1
            idle_steps += 1
            if idle_steps > 3 * diameter * len(self.front):
                self._force_progress()
                idle_steps = 0
                continue

            edge = self.select_swap()
            self._apply_swap(edge)
            inverse = self.mapping.inverse
            self.decay.bump(inverse[edge[0]], inverse[edge[1]], delta)
            self.decay.tick()

        if len(self.output) != len(self.circuit) + len(self.swap_edges):
            raise RoutingError("Router finished with gates left unscheduled.", self.front)

        return self._result((time.perf_counter() - start) * 1000.0)

    def _result(self, runtime_ms: float) -> RoutedCircuit:
        n = self.circuit.num_qubits
        routed = Circuit.from_gates(
            self.device.num_physical_qubits, self.output, self.circuit.qreg, self.circuit.cregs
        )
        swaps = len(self.swap_edges)
        g_ori = len(self.circuit)
        stats = RoutingStats(
            n=n,
            N=self.device.num_physical_qubits,
            g_ori=g_ori,
            swaps=swaps,
            g_add=SWAP_CNOT_COST * swaps,
            g_tot=g_ori + SWAP_CNOT_COST * swaps,
            d_ori=circuit_depth(self.circuit),
            d_out=circuit_depth(routed, decompose_swaps=True),
            search_steps=self.search_steps,
            forced_swaps=self.forced_swaps,
            seed=self.seed,
            route_seed=self.seed,
            runtime_ms=runtime_ms,
        )
        logger.debug(f"Traversal done: {swaps} SWAP(s), {self.search_steps} search step(s).")
        return RoutedCircuit(
            circuit=routed,
            initial_mapping=self.initial_mapping,
            final_mapping=self.mapping.restricted(n),
            stats=stats,
            swap_edges=tuple(self.swap_edges),
        )


def route(
    circuit: Circuit,
    device: CouplingGraph,
    initial_mapping: Optional[Mapping] = None,
    params: Optional[RouterParams] = None,
    seed: int = 0,
) -> RoutedCircuit:
    """
    Routes `circuit` onto `device` in one forward pass.

    Args:
        circuit: Logical circuit to route.
        device: Connected coupling graph with at least circuit.num_qubits qubits.
        initial_mapping: Starting placement; identity when omitted.
        params: Search parameters; defaults when omitted.
        seed: Seed of the tie-breaking rng.

    Returns:
        RoutedCircuit with SWAPs kept as SWAP gates and mappings restricted to
        the program's qubits.
    """
    if initial_mapping is None:
        if circuit.num_qubits > device.num_physical_qubits:
            raise RoutingError(
                f"Circuit uses {circuit.num_qubits} qubits but device '{device.name}' "
                f"only has {device.num_physical_qubits}."
            )
        initial_mapping = Mapping.identity(circuit.num_qubits, device.num_physical_qubits)
    return SabreRouter(circuit, device, initial_mapping, params or RouterParams(), seed).run()
