import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import List, Optional, Tuple

from sabre_mapper.models.circuit import Circuit, reverse_circuit
from sabre_mapper.models.coupling_graph import CouplingGraph
from sabre_mapper.models.mapping import Mapping, random_mapping
from sabre_mapper.models.routed_circuit import RoutedCircuit
from sabre_mapper.services.routing_service import route
from sabre_mapper.validate.exceptions import RoutingError
from sabre_mapper.validate.schemas import RouterParams, TraversalPlan

logger = logging.getLogger(__name__)

_SEED_SPACE = 2 ** 32


def reverse_traversal(
    circuit: Circuit,
    device: CouplingGraph,
    params: Optional[RouterParams] = None,
    seed: int = 0,
) -> Tuple[Mapping, RoutedCircuit]:
    """
    Optimizes the initial mapping by routing forward, backward, forward...

    A random mapping drawn from `seed` starts the first pass; every pass
    hands its final mapping to the next one as its initial mapping. Backward
    passes route the reversed circuit. The last pass is forward and is the
    reported result.

    Returns:
        (optimized initial mapping, RoutedCircuit of the last forward pass)
    """
    params = params or RouterParams()
    if circuit.num_qubits > device.num_physical_qubits:
        raise RoutingError(
            f"Circuit uses {circuit.num_qubits} qubits but device '{device.name}' "
            f"only has {device.num_physical_qubits}."
        )
    plan = TraversalPlan(traversals=params.traversals, restarts=1, base_seed=seed)
    rng = random.Random(seed)
    mapping = random_mapping(circuit.num_qubits, device.num_physical_qubits, rng)
    backward = reverse_circuit(circuit)

    start = time.perf_counter()
    first: Optional[RoutedCircuit] = None
    result: Optional[RoutedCircuit] = None
    route_seed = seed
    for index in range(plan.traversals):
        route_seed = rng.randrange(_SEED_SPACE)
        source = backward if plan.is_backward(index) else circuit
        result = route(source, device, mapping, params, route_seed)
        logger.debug(
            f"Seed {seed} traversal {index + 1}/{plan.traversals} "
            f"({'backward' if plan.is_backward(index) else 'forward'}): {result.swaps_inserted} SWAP(s)."
        )
        if first is None:
            first = result
        mapping = result.final_mapping

    stats = result.stats.model_copy(
        update={
            "seed": seed,
            "route_seed": route_seed,
            "g_first": first.stats.g_add,
            "runtime_first_ms": first.stats.runtime_ms,
            "runtime_ms": (time.perf_counter() - start) * 1000.0,
        }
    )
    return result.initial_mapping, replace(result, stats=stats)


def _fixed_mapping_pass(
    circuit: Circuit, device: CouplingGraph, mapping: Mapping, params: RouterParams, seed: int
) -> RoutedCircuit:
    result = route(circuit, device, mapping, params, seed)
    stats = result.stats.model_copy(
        update={"g_first": result.stats.g_add, "runtime_first_ms": result.stats.runtime_ms}
    )
    return replace(result, stats=stats)


def best_of_restarts(
    circuit: Circuit,
    device: CouplingGraph,
    params: Optional[RouterParams] = None,
    base_seed: int = 0,
    initial_mapping: Optional[Mapping] = None,
    workers: int = 1,
) -> RoutedCircuit:
    """
    Runs one restart per seed base_seed..base_seed+restarts-1 and keeps the
    result with the smallest (g_add, d_out, seed).

    With `initial_mapping`, every restart is a single forward pass from that
    mapping and only the tie-breaking seed varies.
    """
    params = params or RouterParams()
    plan = TraversalPlan.from_params(params, base_seed)
    seeds = list(plan.seeds())

    def attempt(seed: int) -> RoutedCircuit:
        if initial_mapping is not None:
            return _fixed_mapping_pass(circuit, device, initial_mapping, params, seed)
        return reverse_traversal(circuit, device, params, seed)[1]

    if workers > 1 and len(seeds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results: List[RoutedCircuit] = list(pool.map(attempt, seeds))
    else:
        results = [attempt(seed) for seed in seeds]

    for result in results:
        logger.info(
            f"🔁 Restart seed {result.stats.seed}: g_add={result.stats.g_add}, depth={result.stats.d_out}."
        )
    best = min(results, key=lambda r: r.selection_key())
    logger.info(f"🏁 Best of {len(results)} restart(s): seed {best.stats.seed}, g_add={best.stats.g_add}.")
    return replace(best, stats=best.stats.model_copy(update={"restarts_used": len(results)}))
