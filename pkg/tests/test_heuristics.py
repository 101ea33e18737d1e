import pytest

from sabre_mapper.models.devices import fully_connected, line
from sabre_mapper.models.gate_dag import build_dag, initial_front_layer
from sabre_mapper.models.mapping import VACANT, Mapping, random_mapping
from sabre_mapper.services.heuristics import (
    DecayTable,
    compute_extended_set,
    executable_gates,
    h_basic,
    h_full,
    obtain_swaps,
)
from sabre_mapper.utils.generators import random_circuit, random_connected_graph
from tests.conftest import build_cnots


# --- Executable gates ---

def test_worked_example_executability(worked_example, ring, identity4):
    """Under the identity mapping only the 4th and 6th CNOTs are blocked."""
    assert executable_gates(range(6), identity4, ring, worked_example) == [0, 1, 2, 4]


def test_fully_connected_device_executes_everything():
    circuit = random_circuit(6, 15, seed=1)
    mapping = Mapping.identity(6, 6)
    assert executable_gates(range(15), mapping, fully_connected(6), circuit) == list(range(15))


@pytest.mark.parametrize("seed", range(25))
def test_executable_gates_match_direct_adjacency(seed):
    graph = random_connected_graph(9, seed=seed)
    circuit = random_circuit(7, 12, seed=seed)
    mapping = random_mapping(7, 9, seed=seed)
    expected = [
        g.id for g in circuit.gates
        if graph.distances[mapping.physical_of(g.qubits[0]), mapping.physical_of(g.qubits[1])] == 1
    ]
    assert executable_gates(range(12), mapping, graph, circuit) == expected


# --- SWAP candidates ---

def test_candidates_touch_front_qubits(tokyo):
    """q0 on Q0 brings couplers Q0-Q1 and Q0-Q5, plus those of q1's slot."""
    circuit = build_cnots(20, [(0, 1)])
    mapping = Mapping.identity(20, 20)
    candidates = obtain_swaps([0], mapping, tokyo, circuit)
    assert (0, 1) in candidates
    assert (0, 5) in candidates
    assert all(0 in edge or 1 in edge for edge in candidates)
    assert candidates == sorted(set(candidates))


def test_front_covering_every_qubit_yields_all_edges(ring, identity4):
    circuit = build_cnots(4, [(0, 3), (1, 2)])
    assert obtain_swaps([0, 1], identity4, ring, circuit) == ring.sorted_edges()


@pytest.mark.parametrize("seed", range(25))
def test_candidate_count_bounded_by_degrees(seed):
    graph = random_connected_graph(10, seed=seed)
    circuit = random_circuit(8, 6, seed=seed)
    mapping = random_mapping(8, 10, seed=seed)
    front = sorted(initial_front_layer(build_dag(circuit)))
    candidates = obtain_swaps(front, mapping, graph, circuit)
    touched = {mapping.physical_of(q) for g in front for q in circuit.gates[g].qubits}
    assert len(candidates) <= sum(len(graph.adjacency[p]) for p in touched)
    assert all(edge[0] in touched or edge[1] in touched for edge in candidates)


# --- Extended set ---

def test_extended_set_size_zero_is_empty():
    dag = build_dag(build_cnots(3, [(0, 1), (1, 2)]))
    assert compute_extended_set(dag, {0}, 0) == ()


def test_extended_set_follows_the_chain():
    dag = build_dag(build_cnots(4, [(0, 1), (1, 2), (2, 3)]))
    assert compute_extended_set(dag, {0}, 2) == (1, 2)


def test_extended_set_is_breadth_first_and_truncated():
    """Nearer successors come first, ascending id within a layer."""
    circuit = build_cnots(6, [(0, 1), (2, 3), (1, 2), (0, 4), (3, 5), (4, 5)])
    dag = build_dag(circuit)
    front = initial_front_layer(dag)
    assert front == frozenset({0, 1})
    assert compute_extended_set(dag, front, 10) == (2, 3, 4, 5)
    assert compute_extended_set(dag, front, 2) == (2, 3)
    assert not set(compute_extended_set(dag, front, 10)) & front


# --- Cost functions ---

def test_h_basic_adjacent_front(worked_example, ring, identity4):
    """Each adjacent pair contributes one."""
    assert h_basic([0, 1], identity4, ring.distances, worked_example) == 2


def test_h_basic_single_distant_gate():
    circuit = build_cnots(5, [(0, 3)])
    assert h_basic([0], Mapping.identity(5, 5), line(5).distances, circuit) == 3


@pytest.mark.parametrize("seed", range(25))
def test_h_basic_equals_naive_sum(seed):
    graph = random_connected_graph(9, seed=seed)
    circuit = random_circuit(9, 10, seed=seed)
    mapping = random_mapping(9, 9, seed=seed)
    naive = sum(
        graph.distances[mapping.physical_of(g.qubits[0]), mapping.physical_of(g.qubits[1])]
        for g in circuit.gates
    )
    assert h_basic(range(10), mapping, graph.distances, circuit) == naive


def test_h_full_by_hand():
    """|F|=1 at distance 2 and |E|=1 at distance 4 with W=0.5 scores 4.0."""
    circuit = build_cnots(8, [(0, 2), (3, 7)])
    mapping = Mapping.identity(8, 8)
    d = line(8).distances
    assert h_full((5, 6), [0], [1], mapping, d, None, 0.5, circuit) == pytest.approx(4.0)


def test_h_full_drops_empty_extended_set():
    circuit = build_cnots(8, [(0, 2)])
    d = line(8).distances
    assert h_full((5, 6), [0], [], Mapping.identity(8, 8), d, None, 0.5, circuit) == pytest.approx(2.0)


def test_h_full_decay_scales_by_one_plus_delta():
    circuit = build_cnots(8, [(0, 2), (3, 7)])
    mapping = Mapping.identity(8, 8)
    d = line(8).distances
    decay = DecayTable(8)
    decay.bump(5, VACANT, 0.001)
    plain = h_full((5, 6), [0], [1], mapping, d, None, 0.5, circuit)
    decayed = h_full((5, 6), [0], [1], mapping, d, decay, 0.5, circuit)
    assert decayed == pytest.approx(plain * 1.001)


@pytest.mark.parametrize("seed", range(20))
def test_h_full_without_lookahead_ranks_like_h_basic(seed):
    """W=0 and unit decay give h_basic/|F| on the swapped mapping."""
    graph = random_connected_graph(8, seed=seed)
    circuit = random_circuit(8, 6, seed=seed)
    mapping = random_mapping(8, 8, seed=seed)
    front = sorted(initial_front_layer(build_dag(circuit)))
    for edge in obtain_swaps(front, mapping, graph, circuit):
        basic = h_basic(front, mapping.apply_swap(edge), graph.distances, circuit)
        full = h_full(edge, front, [], mapping, graph.distances, DecayTable(8), 0.0, circuit)
        assert full == pytest.approx(basic / len(front))


# --- Decay table ---

def test_decay_accumulates_and_resets():
    decay = DecayTable(3, reset_interval=3)
    decay.bump(0, 1, 0.01)
    decay.tick()
    decay.bump(0, 2, 0.01)
    decay.tick()
    assert decay.values[0] == pytest.approx(1.02)
    assert decay.factor(0, 1) == pytest.approx(1.02)
    assert decay.factor(1, 2) == pytest.approx(1.01)
    decay.tick()
    assert decay.values == [1.0, 1.0, 1.0]
    assert decay.steps_since_reset == 0


def test_decay_factor_for_vacant_slot():
    decay = DecayTable(2)
    decay.bump(1, VACANT, 0.5)
    assert decay.factor(VACANT, 1) == pytest.approx(1.5)
    assert decay.factor(0, VACANT) == 1.0

