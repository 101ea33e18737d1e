from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx

from sabre_mapper.models.circuit import Circuit


@dataclass(frozen=True)
class GateDag:
    """
    Dependency DAG over the two-qubit gates of a circuit.

    Only immediate-predecessor edges are stored: b depends on a when a is
    the most recent earlier two-qubit gate on one of b's qubits. Each node
    therefore has at most two incoming edges.
    """
    nodes: Tuple[int, ...]
    operands: Dict[int, Tuple[int, int]]
    successors: Dict[int, Tuple[int, ...]]
    predecessors: Dict[int, Tuple[int, ...]]
    indegree: Dict[int, int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "indegree", {node: len(self.predecessors[node]) for node in self.nodes}
        )

    def __len__(self) -> int:
        return len(self.nodes)

    def edges(self) -> List[Tuple[int, int]]:
        return [(a, b) for a in self.nodes for b in self.successors[a]]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges())
        return graph


def build_dag(circuit: Circuit) -> GateDag:
    """One pass over the circuit, remembering the last two-qubit gate per qubit."""
    last_on_qubit: Dict[int, int] = {}
    nodes: List[int] = []
    operands: Dict[int, Tuple[int, int]] = {}
    successors: Dict[int, List[int]] = {}
    predecessors: Dict[int, List[int]] = {}

    for gate in circuit.gates:
        if not gate.is_two_qubit:
            continue
        node = gate.id
        nodes.append(node)
        operands[node] = (gate.qubits[0], gate.qubits[1])
        successors[node] = []
        predecessors[node] = []
        for q in gate.qubits:
            prev = last_on_qubit.get(q)
            if prev is not None and prev not in predecessors[node]:
                predecessors[node].append(prev)
                successors[prev].append(node)
            last_on_qubit[q] = node

    return GateDag(
        nodes=tuple(nodes),
        operands=operands,
        successors={k: tuple(v) for k, v in successors.items()},
        predecessors={k: tuple(sorted(v)) for k, v in predecessors.items()},
    )


def initial_front_layer(dag: GateDag) -> FrozenSet[int]:
    """Two-qubit gates with no predecessors."""
    return frozenset(node for node in dag.nodes if dag.indegree[node] == 0)
