import logging
from typing import List, Optional, Tuple

from sabre_mapper.constants import GateKind
from sabre_mapper.models.circuit import Circuit, expand_source_swaps, qubit_streams
from sabre_mapper.models.coupling_graph import CouplingGraph
from sabre_mapper.models.gate import Gate, swap as swap_gate
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.validate.exceptions import CircuitError, MappingError, VerificationError
from sabre_mapper.validate.schemas import VerificationReport, Violation

logger = logging.getLogger(__name__)


def has_provenance(circuit: Circuit) -> bool:
    """True when gates carry the id of the source gate they were copied from."""
    return any(g.origin is not None for g in circuit.gates if g.kind is not GateKind.SWAP)


def _is_inserted_cnot(gate: Gate) -> bool:
    return gate.kind is GateKind.CNOT and gate.origin is None


def fold_inserted_swaps(circuit: Circuit) -> Tuple[Circuit, int]:
    """
    Folds CNOT(a,b) CNOT(b,a) CNOT(a,b) triples without provenance back into
    SWAP(a,b). Only meaningful when the circuit carries provenance; circuits
    without it are returned untouched.
    """
    if not has_provenance(circuit):
        return circuit, 0
    gates = circuit.gates
    out: List[Gate] = []
    folded = 0
    i = 0
    while i < len(gates):
        window = gates[i:i + 3]
        if len(window) == 3 and all(_is_inserted_cnot(g) for g in window):
            a, b = window[0].qubits
            if window[1].qubits == (b, a) and window[2].qubits == (a, b):
                out.append(swap_gate(0, a, b))
                folded += 1
                i += 3
                continue
        out.append(gates[i])
        i += 1
    return Circuit.from_gates(circuit.num_qubits, out, circuit.qreg, circuit.cregs), folded


def _start_mapping(routed: Circuit, initial_mapping: Mapping) -> Mapping:
    if routed.num_qubits > initial_mapping.num_physical:
        raise CircuitError(
            f"Routed circuit has {routed.num_qubits} wires but the device has "
            f"{initial_mapping.num_physical} qubits."
        )
    if routed.num_qubits > initial_mapping.num_logical:
        return initial_mapping.padded()
    return initial_mapping


def check_compliance(
    routed: Circuit, device: CouplingGraph, initial_mapping: Mapping
) -> VerificationReport:
    """
    Replays the placement through `routed` (SWAPs move qubits) and reports
    the first two-qubit gate acting on an uncoupled pair.
    """
    if initial_mapping.num_physical != device.num_physical_qubits:
        raise MappingError(
            f"Mapping targets {initial_mapping.num_physical} qubits, device has {device.num_physical_qubits}."
        )
    routed, _ = fold_inserted_swaps(routed)
    mapping = _start_mapping(routed, initial_mapping)
    n = initial_mapping.num_logical

    for gate in routed.gates:
        if not gate.is_two_qubit:
            continue
        a, b = gate.qubits
        pa, pb = mapping.forward[a], mapping.forward[b]
        if not device.has_edge(pa, pb):
            return VerificationReport(
                compliant=False,
                first_violation=Violation(
                    gate_id=gate.id,
                    reason=f"{gate.name} q[{a}],q[{b}] acts on uncoupled physical pair ({pa}, {pb})",
                ),
            )
        if gate.kind is GateKind.SWAP:
            mapping = mapping.apply_swap((pa, pb))

    return VerificationReport(compliant=True, final_mapping=mapping.restricted(n).to_dict())


def _mismatch(gate_id: int, reason: str, compliant: bool) -> VerificationReport:
    return VerificationReport(
        compliant=compliant, equivalent=False, first_violation=Violation(gate_id=gate_id, reason=reason)
    )


def verify_equivalence(
    original: Circuit,
    routed: Circuit,
    initial_mapping: Mapping,
    device: Optional[CouplingGraph] = None,
) -> VerificationReport:
    """
    Checks that `routed` is `original` plus SWAPs.

    SWAPs are stripped while folded into the running mapping. Every
    surviving gate must be the next pending gate on each of its qubits in
    `original`, with identical name, operands and parameters. Gates with
    provenance are matched by origin id, others structurally. SWAP gates of
    `original` are compared as their three CNOTs.

    Args:
        original: Source circuit.
        routed: Routed circuit in logical labels (SWAP or decomposed form).
        initial_mapping: Placement the routed circuit starts from.
        device: When given, compliance is checked first and a non-compliant
            report is returned as is. Without a device compliance is not
            assessed and reported as True.

    Returns:
        VerificationReport with the final mapping on success.
    """
    compliant = True
    if device is not None:
        compliance = check_compliance(routed, device, initial_mapping)
        if not compliance.compliant:
            return compliance
    original = expand_source_swaps(original)
    routed, folded = fold_inserted_swaps(routed)
    provenance = has_provenance(routed)
    mapping = _start_mapping(routed, initial_mapping)
    n = original.num_qubits
    if initial_mapping.num_logical != n:
        raise MappingError(f"Mapping places {initial_mapping.num_logical} qubits; circuit has {n}.")

    streams = qubit_streams(original)
    heads = [0] * n
    matched = 0

    for gate in routed.gates:
        if gate.kind is GateKind.SWAP:
            a, b = gate.qubits
            mapping = mapping.apply_swap((mapping.forward[a], mapping.forward[b]))
            continue
        if any(q >= n for q in gate.qubits):
            return _mismatch(gate.id, "gate acts on a wire outside the program", compliant)

        if provenance:
            if gate.origin is None or not 0 <= gate.origin < len(original):
                return _mismatch(gate.id, "gate has no valid source gate", compliant)
            source = original.gates[gate.origin]
        else:
            q0 = gate.qubits[0]
            if heads[q0] >= len(streams[q0]):
                return _mismatch(gate.id, f"extra gate on q[{q0}]", compliant)
            source = original.gates[streams[q0][heads[q0]]]

        if source.signature() != gate.signature():
            return _mismatch(gate.id, f"gate differs from source gate {source.id}", compliant)
        for q in source.qubits:
            if heads[q] >= len(streams[q]) or streams[q][heads[q]] != source.id:
                return _mismatch(gate.id, f"source gate {source.id} is out of order on q[{q}]", compliant)
        for q in source.qubits:
            heads[q] += 1
        matched += 1

    if matched != len(original):
        return _mismatch(len(routed), f"{len(original) - matched} source gate(s) missing", compliant)

    return VerificationReport(
        compliant=compliant,
        equivalent=True,
        final_mapping=mapping.restricted(n).to_dict(),
        swaps_folded=folded,
    )


def assert_routed_valid(
    original: Circuit, routed: Circuit, device: CouplingGraph, initial_mapping: Mapping
) -> VerificationReport:
    """Full check used after routing; raises VerificationError on failure."""
    report = verify_equivalence(original, routed, initial_mapping, device)
    if not report.ok:
        violation = report.first_violation
        detail = f" at gate {violation.gate_id}: {violation.reason}" if violation else ""
        raise VerificationError(f"Routed circuit failed verification{detail}.", report)
    logger.info("✅ Routed circuit is compliant and equivalent.")
    return report
