from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

from sabre_mapper.constants import EmitForm
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.validate.schemas import RoutingStats


@dataclass(frozen=True)
class RoutedCircuit:
    """
    Hardware-compliant output of one traversal or restart.

    `circuit` keeps inserted SWAPs as SWAP gates (origin None); every other
    gate carries the id of its source gate in `origin`. Mappings are
    restricted to the program's logical qubits.
    """
    circuit: Circuit
    initial_mapping: Mapping
    final_mapping: Mapping
    stats: RoutingStats
    swap_edges: Tuple[Tuple[int, int], ...] = field(default=(), compare=False)

    def output(self, form: EmitForm = EmitForm.DECOMPOSED) -> Circuit:
        if form is EmitForm.DECOMPOSED:
            return self.circuit.decompose_swaps()
        return self.circuit

    @property
    def swaps_inserted(self) -> int:
        return self.stats.swaps

    @property
    def added_gates(self) -> int:
        return self.stats.g_add

    def selection_key(self) -> Tuple[int, int, int]:
        """Lexicographic rank used to pick the best restart."""
        return (self.stats.g_add, self.stats.d_out, self.stats.seed)

    def stats_payload(self) -> Dict[str, Any]:
        """Stats JSON payload, mappings as {logical: physical}."""
        payload = self.stats.model_dump(exclude_none=True)
        payload["initial_mapping"] = _mapping_json(self.initial_mapping)
        payload["final_mapping"] = _mapping_json(self.final_mapping)
        return payload


def _mapping_json(mapping: Mapping) -> Dict[str, int]:
    return {str(q): p for q, p in mapping.to_dict().items()}
