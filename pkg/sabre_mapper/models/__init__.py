from .gate import Gate, cnot, swap, single, measure
from .circuit import Circuit, GateCounts, reverse_circuit, circuit_depth, gate_count
from .gate_dag import GateDag, build_dag, initial_front_layer
from .coupling_graph import (
    CouplingGraph,
    DistanceMatrix,
    build_graph,
    compute_distance_matrix,
    neighbors,
)
from .devices import builtin_device, list_devices
from .mapping import Mapping, VACANT, random_mapping, apply_swap, physical_of, logical_of
from .routed_circuit import RoutedCircuit

__all__ = [
    "Gate", "cnot", "swap", "single", "measure",
    "Circuit", "GateCounts", "reverse_circuit", "circuit_depth", "gate_count",
    "GateDag", "build_dag", "initial_front_layer",
    "CouplingGraph", "DistanceMatrix", "build_graph", "compute_distance_matrix", "neighbors",
    "builtin_device", "list_devices",
    "Mapping", "VACANT", "random_mapping", "apply_swap", "physical_of", "logical_of",
    "RoutedCircuit",
]
