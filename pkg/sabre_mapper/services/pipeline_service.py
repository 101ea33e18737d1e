import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sabre_mapper.factory import load_device
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.coupling_graph import CouplingGraph
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.models.routed_circuit import RoutedCircuit
from sabre_mapper.services.layout_service import best_of_restarts
from sabre_mapper.services.oracle_service import optimal_swap_count
from sabre_mapper.services.verification_service import assert_routed_valid, verify_equivalence
from sabre_mapper.utils.metrics import log_process_metrics
from sabre_mapper.utils.qasm import load_qasm, save_qasm, write_qasm
from sabre_mapper.utils.reporting import sweep_row, write_stats
from sabre_mapper.validate.schemas import RunConfig, SweepRow, VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class RouteOutcome:
    circuit: Circuit
    device: CouplingGraph
    result: RoutedCircuit
    qasm: str
    report: Optional[VerificationReport] = None


def _fixed_mapping(config: RunConfig, device: CouplingGraph) -> Optional[Mapping]:
    if config.initial_mapping is None:
        return None
    return Mapping.from_dict(config.initial_mapping, device.num_physical_qubits)


def route_circuit(
    circuit: Circuit, device: CouplingGraph, config: RunConfig
) -> Tuple[RoutedCircuit, Optional[VerificationReport]]:
    """Best-of-restarts routing for an in-memory circuit, with the post-route self-check."""
    result = best_of_restarts(
        circuit,
        device,
        config.params,
        base_seed=config.seed,
        initial_mapping=_fixed_mapping(config, device),
        workers=config.workers,
    )
    if not config.verify:
        logger.warning("⚠️ Verification skipped (--no-verify).")
        return result, None
    return result, assert_routed_valid(circuit, result.circuit, device, result.initial_mapping)


def run_route(config: RunConfig) -> RouteOutcome:
    """
    Full `route` pipeline: read the circuit and device, route, verify, then
    write the routed QASM and stats when paths are configured.
    """
    circuit = load_qasm(config.input_path)
    device = load_device(config.coupling)
    logger.info(f"🚀 Routing {circuit.num_qubits}-qubit circuit on '{device.name}' with seed {config.seed}.")

    result, report = route_circuit(circuit, device, config)

    qasm = write_qasm(result.circuit, config.emit)
    if config.output_path:
        save_qasm(result.circuit, config.output_path, config.emit)
    if config.stats_path:
        write_stats(result, config.stats_path)
    log_process_metrics("route")
    return RouteOutcome(circuit=circuit, device=device, result=result, qasm=qasm, report=report)


def run_sweep(config: RunConfig, deltas: Sequence[float]) -> List[SweepRow]:
    """Routes the same circuit once per decay increment and collects the trade-off rows."""
    if not deltas:
        raise ValueError("At least one delta value is required.")
    circuit = load_qasm(config.input_path)
    device = load_device(config.coupling)
    return sweep_circuit(circuit, device, config, deltas)


def sweep_circuit(
    circuit: Circuit, device: CouplingGraph, config: RunConfig, deltas: Sequence[float]
) -> List[SweepRow]:
    rows: List[SweepRow] = []
    for delta in deltas:
        params = config.params.model_copy(update={"decay_delta": float(delta)})
        swept = config.model_copy(update={"params": params})
        result, _ = route_circuit(circuit, device, swept)
        rows.append(sweep_row(float(delta), result))
        logger.info(f"📈 delta={delta}: g_tot={result.stats.g_tot}, depth={result.stats.d_out}.")
    return rows


def run_verify(
    input_path: str, routed_path: str, coupling: str, initial_mapping: Optional[dict] = None
) -> VerificationReport:
    """Checks a routed QASM file (either output form) against its source."""
    original = load_qasm(input_path)
    routed = load_qasm(routed_path, routed=True)
    device = load_device(coupling)
    if initial_mapping is None:
        mapping = Mapping.identity(original.num_qubits, device.num_physical_qubits)
    else:
        mapping = Mapping.from_dict(initial_mapping, device.num_physical_qubits)
    return verify_equivalence(original, routed, mapping, device)


def run_oracle(input_path: str, coupling: str, initial_mapping: Optional[dict] = None) -> int:
    circuit = load_qasm(input_path)
    device = load_device(coupling)
    mapping = None
    if initial_mapping is not None:
        mapping = Mapping.from_dict(initial_mapping, device.num_physical_qubits)
    optimum = optimal_swap_count(circuit, device, mapping)
    logger.info(f"🎯 Optimal SWAP count: {optimum}.")
    return optimum
