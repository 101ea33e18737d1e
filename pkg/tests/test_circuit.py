import networkx as nx
import pytest
from hypothesis import given

from sabre_mapper.constants import GateKind
from sabre_mapper.models.circuit import Circuit, circuit_depth, expand_source_swaps, gate_count, reverse_circuit
from sabre_mapper.models.gate import Gate, cnot, measure, single, swap
from sabre_mapper.models.gate_dag import build_dag, initial_front_layer
from sabre_mapper.validate.exceptions import CircuitError
from tests.conftest import build_cnots
from tests.strategies import cnot_circuits, mixed_circuits


# --- Gate and circuit validation ---

def test_two_qubit_gate_needs_distinct_operands():
    """A CNOT on the same qubit twice is rejected."""
    with pytest.raises(CircuitError):
        cnot(0, 1, 1)


def test_gate_arity_is_checked():
    """Single-qubit kinds take one operand, two-qubit kinds two."""
    with pytest.raises(CircuitError):
        Gate(0, GateKind.SINGLE, (0, 1), name="h")
    with pytest.raises(CircuitError):
        Gate(0, GateKind.CNOT, (0,))


def test_unknown_single_qubit_gate_is_rejected():
    """Only the supported single-qubit names are accepted."""
    with pytest.raises(CircuitError):
        single(0, "ccx", 0)
    with pytest.raises(CircuitError):
        single(0, "rz", 0)


def test_operand_out_of_range_is_rejected():
    """Every operand must be below num_qubits."""
    with pytest.raises(CircuitError):
        build_cnots(2, [(0, 2)])


def test_ids_must_be_dense():
    """Gate ids follow program order."""
    with pytest.raises(CircuitError):
        Circuit(2, (cnot(1, 0, 1),))


def test_measure_needs_declared_bit():
    """Measurements must target a declared classical bit."""
    with pytest.raises(CircuitError):
        Circuit(1, (measure(0, 0, "c", 0),))
    circuit = Circuit(1, (measure(0, 0, "c", 0),), cregs=(("c", 1),))
    assert circuit.gates[0].clbit == ("c", 0)


# --- DAG and front layer ---

def test_dag_links_gates_sharing_a_qubit():
    """g2 shares q1 with g0 and q2 with g1; the initial front layer is {g0, g1}."""
    dag = build_dag(build_cnots(4, [(0, 1), (2, 3), (1, 2)]))
    assert set(dag.edges()) == {(0, 2), (1, 2)}
    assert initial_front_layer(dag) == frozenset({0, 1})


def test_dag_keeps_only_immediate_predecessors():
    """A chain has no transitive edge."""
    dag = build_dag(build_cnots(4, [(0, 1), (1, 2), (2, 3)]))
    assert set(dag.edges()) == {(0, 1), (1, 2)}
    assert initial_front_layer(dag) == frozenset({0})


def test_dag_ignores_single_qubit_gates():
    """Circuits without two-qubit gates give an empty DAG."""
    circuit = Circuit.from_gates(2, [single(0, "h", 0), single(0, "x", 1)])
    dag = build_dag(circuit)
    assert len(dag) == 0
    assert initial_front_layer(dag) == frozenset()


def test_repeated_pair_has_single_edge():
    """Two gates sharing both qubits are linked once."""
    dag = build_dag(build_cnots(2, [(0, 1), (1, 0)]))
    assert dag.edges() == [(0, 1)]
    assert dag.indegree[1] == 1


@given(cnot_circuits(max_qubits=8, max_gates=30))
def test_dag_is_acyclic_with_at_most_two_parents(circuit):
    """Topological sort succeeds and indegree never exceeds two."""
    dag = build_dag(circuit)
    assert nx.is_directed_acyclic_graph(dag.to_networkx())
    assert all(d <= 2 for d in dag.indegree.values())


@given(cnot_circuits(max_qubits=6, max_gates=20))
def test_reversed_dag_has_flipped_edges(circuit):
    """Reversal maps every edge a->b to (g-1-b)->(g-1-a)."""
    last = len(circuit) - 1
    forward = set(build_dag(circuit).edges())
    backward = set(build_dag(reverse_circuit(circuit)).edges())
    assert backward == {(last - b, last - a) for a, b in forward}


# --- Reversal ---

def test_reverse_two_gates():
    """[g0; g1] becomes [g1; g0] with operands untouched."""
    circuit = build_cnots(4, [(0, 1), (2, 3)])
    reversed_ = reverse_circuit(circuit)
    assert [g.qubits for g in reversed_.gates] == [(2, 3), (0, 1)]
    assert [g.id for g in reversed_.gates] == [0, 1]


@given(mixed_circuits())
def test_reverse_is_an_involution(circuit):
    """Reversing twice restores the circuit."""
    assert reverse_circuit(reverse_circuit(circuit)).structurally_equal(circuit)


# --- Depth and counts ---

def test_worked_example_depth(worked_example):
    """The six-CNOT example has depth 5."""
    assert circuit_depth(worked_example) == 5


def test_depth_of_small_circuits():
    """Disjoint CNOTs share a step, overlapping ones do not."""
    assert circuit_depth(Circuit.from_gates(1, [single(0, "h", 0)])) == 1
    assert circuit_depth(build_cnots(4, [(0, 1), (2, 3)])) == 1
    assert circuit_depth(build_cnots(3, [(0, 1), (1, 2)])) == 2
    assert circuit_depth(Circuit(2)) == 0


def test_swap_counts_three_steps_when_decomposed():
    """A SWAP occupies three unit steps in decomposed form, one otherwise."""
    circuit = Circuit.from_gates(2, [swap(0, 0, 1)])
    assert circuit_depth(circuit) == 3
    assert circuit_depth(circuit, decompose_swaps=False) == 1
    assert circuit_depth(circuit.decompose_swaps()) == 3


def test_gate_count_tallies_kinds(worked_example):
    """Counts per kind and total."""
    counts = gate_count(worked_example)
    assert counts.cnot == 6
    assert counts.total == 6
    assert gate_count(Circuit(3)).total == 0


def test_decomposed_swaps_add_three_cnots_each():
    """Two SWAPs become six extra CNOTs."""
    circuit = Circuit.from_gates(3, [cnot(0, 0, 1), swap(0, 0, 1), swap(0, 1, 2)])
    plain = gate_count(circuit)
    decomposed = gate_count(circuit, decompose_swaps=True)
    assert plain.swap == 2
    assert decomposed.swap == 0
    assert decomposed.cnot == plain.cnot + 6
    assert gate_count(circuit.decompose_swaps()) == decomposed


def test_decompose_swaps_marks_inserted_cnots():
    """CNOTs produced from a SWAP carry no source gate."""
    circuit = Circuit.from_gates(2, [cnot(0, 0, 1, origin=0), swap(0, 0, 1)])
    out = circuit.decompose_swaps()
    assert [g.qubits for g in out.gates] == [(0, 1), (0, 1), (1, 0), (0, 1)]
    assert [g.origin for g in out.gates] == [0, None, None, None]


def test_expand_source_swaps():
    plain = build_cnots(3, [(0, 1), (1, 2)])
    assert expand_source_swaps(plain) is plain
    expanded = expand_source_swaps(Circuit.from_gates(3, [swap(0, 1, 2), cnot(0, 0, 1)]))
    assert [(g.kind, g.qubits) for g in expanded.gates] == [
        (GateKind.CNOT, (1, 2)), (GateKind.CNOT, (2, 1)), (GateKind.CNOT, (1, 2)), (GateKind.CNOT, (0, 1)),
    ]
