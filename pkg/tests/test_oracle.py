import pytest
from hypothesis import given, strategies as st

from sabre_mapper.config import Config
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.coupling_graph import build_graph
from sabre_mapper.models.devices import fully_connected, line
from sabre_mapper.models.gate import single
from sabre_mapper.models.mapping import Mapping, random_mapping
from sabre_mapper.services.oracle_service import optimal_swap_count
from sabre_mapper.services.routing_service import route
from sabre_mapper.utils.generators import random_circuit
from sabre_mapper.validate.exceptions import DisconnectedDeviceError, MappingError, OracleLimitError
from tests.conftest import build_cnots
from tests.strategies import cnot_pairs


def _iddfs_optimum(pairs, edges, num_physical, start, limit=8):
    """Iterative deepening over SWAP sequences with in-order greedy execution."""

    def execute(slots, done):
        done = list(done)
        progress = True
        while progress:
            progress = False
            for i, (a, b) in enumerate(pairs):
                if done[i]:
                    continue
                blocked = any(
                    not done[j] and set(pairs[j]) & {a, b} for j in range(i)
                )
                if blocked:
                    continue
                pa, pb = slots.index(a), slots.index(b)
                if (min(pa, pb), max(pa, pb)) in edges:
                    done[i] = True
                    progress = True
        return done

    def search(slots, done, budget):
        done = execute(slots, done)
        if all(done):
            return True
        if budget == 0:
            return False
        for pa, pb in edges:
            if slots[pa] < 0 and slots[pb] < 0:
                continue
            moved = list(slots)
            moved[pa], moved[pb] = moved[pb], moved[pa]
            if search(moved, done, budget - 1):
                return True
        return False

    slots = [-1] * num_physical
    for q, p in enumerate(start):
        slots[p] = q
    for budget in range(limit + 1):
        if search(slots, [False] * len(pairs), budget):
            return budget
    raise AssertionError("no solution within the search limit")


def test_worked_example_optimum_is_one(worked_example, ring, identity4):
    """The reference routing's single SWAP is optimal."""
    assert optimal_swap_count(worked_example, ring, identity4) == 1


def test_worked_example_needs_a_swap_under_any_placement(worked_example, ring):
    """Five distinct interacting pairs cannot embed in a 4-cycle."""
    assert optimal_swap_count(worked_example, ring) == 1


def test_fully_connected_device_needs_no_swaps():
    circuit = random_circuit(5, 10, seed=3)
    assert optimal_swap_count(circuit, fully_connected(5), Mapping.identity(5, 5)) == 0


def test_line_ends_need_one_swap():
    assert optimal_swap_count(build_cnots(3, [(0, 2)]), line(3), Mapping.identity(3, 3)) == 1


def test_free_placement_can_avoid_swaps():
    """Ends of the line are adjacent under some injection."""
    assert optimal_swap_count(build_cnots(3, [(0, 2)]), line(3)) == 0


def test_single_qubit_program_needs_nothing():
    circuit = Circuit.from_gates(1, [single(0, "h", 0)])
    assert optimal_swap_count(circuit, line(2), Mapping.identity(1, 2)) == 0


def test_too_many_logical_qubits(monkeypatch):
    monkeypatch.setattr(Config, "ORACLE_MAX_LOGICAL", 3)
    with pytest.raises(OracleLimitError):
        optimal_swap_count(build_cnots(4, [(0, 3)]), line(4))


def test_too_many_physical_qubits():
    with pytest.raises(OracleLimitError):
        optimal_swap_count(build_cnots(2, [(0, 1)]), line(Config.ORACLE_MAX_PHYSICAL + 1))


def test_too_many_two_qubit_gates(ring):
    pairs = [(0, 1)] * (Config.ORACLE_MAX_TWO_QUBIT_GATES + 1)
    with pytest.raises(OracleLimitError):
        optimal_swap_count(build_cnots(4, pairs), ring)


def test_disconnected_device():
    with pytest.raises(DisconnectedDeviceError):
        optimal_swap_count(build_cnots(2, [(0, 1)]), build_graph(4, [(0, 1), (2, 3)]))


def test_mapping_must_match_sizes(worked_example, ring):
    with pytest.raises(MappingError):
        optimal_swap_count(worked_example, ring, Mapping.identity(4, 5))


@given(
    st.sampled_from(["ring4", "line4", "line5"]),
    st.integers(0, 10_000),
    st.data(),
)
def test_optimum_agrees_with_iterative_deepening(device_name, seed, data):
    """Breadth-first search and a plain iterative-deepening search agree."""
    device = line(int(device_name[-1])) if device_name.startswith("line") else build_graph(
        4, [(0, 1), (1, 3), (3, 2), (2, 0)], "ring4"
    )
    num_physical = device.num_physical_qubits
    n = data.draw(st.integers(2, num_physical))
    pairs = data.draw(cnot_pairs(n, max_size=5))
    mapping = random_mapping(n, num_physical, seed=seed)
    expected = _iddfs_optimum(pairs, set(device.sorted_edges()), num_physical, mapping.forward)
    assert optimal_swap_count(build_cnots(n, pairs), device, mapping) == expected


@given(st.integers(0, 10_000), st.data())
def test_appending_a_gate_never_lowers_the_optimum(seed, data):
    device = line(5)
    pairs = data.draw(cnot_pairs(5, max_size=6))
    extra = data.draw(cnot_pairs(5, max_size=1).filter(bool))
    mapping = random_mapping(5, 5, seed=seed)
    shorter = optimal_swap_count(build_cnots(5, pairs), device, mapping)
    longer = optimal_swap_count(build_cnots(5, pairs + extra), device, mapping)
    assert longer >= shorter


@pytest.mark.parametrize("seed", range(40))
def test_router_never_beats_the_optimum(seed, ring):
    circuit = random_circuit(4, 7, seed=seed)
    mapping = random_mapping(4, 4, seed=seed)
    assert route(circuit, ring, mapping, seed=seed).swaps_inserted >= optimal_swap_count(circuit, ring, mapping)
