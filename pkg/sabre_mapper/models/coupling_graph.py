import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from sabre_mapper.validate.exceptions import DeviceError, DisconnectedDeviceError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class CouplingGraph:
    """
    Undirected device topology over physical qubits 0..N-1.
    Edges are stored as (low, high) pairs; adjacency lists are ascending.
    """
    num_physical_qubits: int
    edges: FrozenSet[Edge]
    name: str = "custom"
    adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        adjacency: List[List[int]] = [[] for _ in range(self.num_physical_qubits)]
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(n)) for n in adjacency))

    def __len__(self) -> int:
        return self.num_physical_qubits

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_physical_qubits))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return compute_distance_matrix(self)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts. `rows` is a plain nested-list copy for hot loops."""
    matrix: np.ndarray
    rows: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def diameter(self) -> int:
        return int(self.matrix.max()) if self.matrix.size else 0


def build_graph(num_qubits: int, edge_list: Iterable[Sequence[int]], name: str = "custom") -> CouplingGraph:
    """Validates and deduplicates an undirected edge list."""
    if num_qubits < 1:
        raise DeviceError(f"A device needs at least one physical qubit, got {num_qubits}.")
    edges = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise DeviceError(f"Edge {tuple(pair)} must have exactly two endpoints.")
        a, b = int(pair[0]), int(pair[1])
        if not (0 <= a < num_qubits and 0 <= b < num_qubits):
            raise DeviceError(f"Edge ({a}, {b}) out of range for {num_qubits} physical qubits.")
        if a == b:
            raise DeviceError(f"Self-loop on physical qubit {a} is not allowed.")
        edges.add((min(a, b), max(a, b)))
    return CouplingGraph(num_qubits, frozenset(edges), name)


def compute_distance_matrix(graph: CouplingGraph) -> DistanceMatrix:
    """Unit-weight Floyd-Warshall. Disconnected devices are rejected."""
    if not graph.is_connected():
        components = nx.number_connected_components(graph.to_networkx())
        raise DisconnectedDeviceError(
            f"Device '{graph.name}' has {components} disconnected components; "
            "routing between components is impossible."
        )
    nodes = list(range(graph.num_physical_qubits))
    matrix = nx.floyd_warshall_numpy(graph.to_networkx(), nodelist=nodes).astype(int)
    logger.debug(f"Distance matrix for '{graph.name}' computed (diameter {int(matrix.max())}).")
    return DistanceMatrix(matrix=matrix, rows=tuple(tuple(r) for r in matrix.tolist()))


def neighbors(graph: CouplingGraph, q: int) -> List[int]:
    if not 0 <= q < graph.num_physical_qubits:
        raise DeviceError(f"Physical qubit {q} out of range for {graph.num_physical_qubits} qubits.")
    return list(graph.adjacency[q])


def shortest_path(graph: CouplingGraph, source: int, target: int) -> List[int]:
    return nx.bidirectional_shortest_path(graph.to_networkx(), source, target)
